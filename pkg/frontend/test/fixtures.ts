// Captured verbatim from the running decision service (test client),
// session ids normalized.  Tests assert the UI renders these strings
// exactly as received.

export const captured = {
  "compare_fuzzy_attitudes": {
    "alternatives": [
      "A1 Expert Judgment",
      "A2 COCOMO",
      "A3 Fuzzy Neural Network"
    ],
    "flips": [
      [
        "A1 Expert Judgment",
        "A2 COCOMO"
      ],
      [
        "A1 Expert Judgment",
        "A3 Fuzzy Neural Network"
      ],
      [
        "A2 COCOMO",
        "A3 Fuzzy Neural Network"
      ]
    ],
    "method_a": "attitude:moderate",
    "method_b": "attitude:optimistic",
    "ranking_a": [
      "A3 Fuzzy Neural Network",
      "A1 Expert Judgment",
      "A2 COCOMO"
    ],
    "ranking_b": [
      "A2 COCOMO",
      "A1 Expert Judgment",
      "A3 Fuzzy Neural Network"
    ],
    "scores_a": [
      "0.3217",
      "0.2605",
      "0.4178"
    ],
    "scores_b": [
      "0.3286",
      "0.3730",
      "0.2984"
    ],
    "top_choice_agrees": false
  },
  "create_session": {
    "alternatives": [
      "A1 Expert Judgment",
      "A2 COCOMO",
      "A3 Fuzzy Neural Network"
    ],
    "cells_set": 0,
    "cells_total": 18,
    "complete": false,
    "completion": "0.0000",
    "created": 1786200060.2232876,
    "criteria": [
      "C1 Reliability",
      "C2 MMRE",
      "C3 Pred",
      "C4 Uncertainty"
    ],
    "goal": "Select the best software effort estimation model",
    "id": "SID-NEW",
    "matrices": {
      "C1 Reliability": {
        "cells": {},
        "cells_set": 0,
        "cells_total": 3,
        "complete": false,
        "size": 3
      },
      "C2 MMRE": {
        "cells": {},
        "cells_set": 0,
        "cells_total": 3,
        "complete": false,
        "size": 3
      },
      "C3 Pred": {
        "cells": {},
        "cells_set": 0,
        "cells_total": 3,
        "complete": false,
        "size": 3
      },
      "C4 Uncertainty": {
        "cells": {},
        "cells_set": 0,
        "cells_total": 3,
        "complete": false,
        "size": 3
      },
      "criteria": {
        "cells": {},
        "cells_set": 0,
        "cells_total": 6,
        "complete": false,
        "size": 4
      }
    },
    "mode": "crisp",
    "updated": 1786200060.2232876
  },
  "fixture_crisp_state": {
    "alternatives": [
      "A1 Expert Judgment",
      "A2 COCOMO",
      "A3 Fuzzy Neural Network"
    ],
    "cells_set": 18,
    "cells_total": 18,
    "complete": true,
    "completion": "1.0000",
    "created": 1786200060.1829185,
    "criteria": [
      "C1 Reliability",
      "C2 MMRE",
      "C3 Pred",
      "C4 Uncertainty"
    ],
    "goal": "Select the best software effort estimation model",
    "id": "SID-CRISP",
    "matrices": {
      "C1 Reliability": {
        "cells": {
          "0,1": 0.2,
          "0,2": 0.2,
          "1,2": 3.0
        },
        "cells_set": 3,
        "cells_total": 3,
        "complete": true,
        "size": 3
      },
      "C2 MMRE": {
        "cells": {
          "0,1": 1.0,
          "0,2": 1.0,
          "1,2": 0.3333333333333333
        },
        "cells_set": 3,
        "cells_total": 3,
        "complete": true,
        "size": 3
      },
      "C3 Pred": {
        "cells": {
          "0,1": 1.0,
          "0,2": 1.0,
          "1,2": 0.3333333333333333
        },
        "cells_set": 3,
        "cells_total": 3,
        "complete": true,
        "size": 3
      },
      "C4 Uncertainty": {
        "cells": {
          "0,1": 5.0,
          "0,2": 5.0,
          "1,2": 0.14285714285714285
        },
        "cells_set": 3,
        "cells_total": 3,
        "complete": true,
        "size": 3
      },
      "criteria": {
        "cells": {
          "0,1": 0.2,
          "0,2": 0.3333333333333333,
          "0,3": 1.0,
          "1,2": 1.0,
          "1,3": 7.0,
          "2,3": 7.0
        },
        "cells_set": 6,
        "cells_total": 6,
        "complete": true,
        "size": 4
      }
    },
    "mode": "crisp",
    "updated": 1786200060.1829185
  },
  "fixture_fuzzy_state": {
    "alternatives": [
      "A1 Expert Judgment",
      "A2 COCOMO",
      "A3 Fuzzy Neural Network"
    ],
    "cells_set": 18,
    "cells_total": 18,
    "complete": true,
    "completion": "1.0000",
    "created": 1786200060.194723,
    "criteria": [
      "C1 Reliability",
      "C2 MMRE",
      "C3 Pred",
      "C4 Uncertainty"
    ],
    "goal": "Select the best software effort estimation model",
    "id": "SID-FUZZY",
    "matrices": {
      "C1 Reliability": {
        "cells": {
          "0,1": [
            0.14285714285714285,
            0.2,
            0.3333333333333333
          ],
          "0,2": [
            0.14285714285714285,
            0.2,
            0.3333333333333333
          ],
          "1,2": [
            1.0,
            3.0,
            5.0
          ]
        },
        "cells_set": 3,
        "cells_total": 3,
        "complete": true,
        "size": 3
      },
      "C2 MMRE": {
        "cells": {
          "0,1": [
            1.0,
            1.0,
            1.0
          ],
          "0,2": [
            1.0,
            1.0,
            1.0
          ],
          "1,2": [
            0.2,
            0.3333333333333333,
            1.0
          ]
        },
        "cells_set": 3,
        "cells_total": 3,
        "complete": true,
        "size": 3
      },
      "C3 Pred": {
        "cells": {
          "0,1": [
            1.0,
            1.0,
            1.0
          ],
          "0,2": [
            1.0,
            1.0,
            1.0
          ],
          "1,2": [
            0.2,
            0.3333333333333333,
            1.0
          ]
        },
        "cells_set": 3,
        "cells_total": 3,
        "complete": true,
        "size": 3
      },
      "C4 Uncertainty": {
        "cells": {
          "0,1": [
            3.0,
            5.0,
            7.0
          ],
          "0,2": [
            3.0,
            5.0,
            7.0
          ],
          "1,2": [
            5.0,
            7.0,
            9.0
          ]
        },
        "cells_set": 3,
        "cells_total": 3,
        "complete": true,
        "size": 3
      },
      "criteria": {
        "cells": {
          "0,1": [
            0.14285714285714285,
            0.2,
            0.3333333333333333
          ],
          "0,2": [
            0.2,
            0.3333333333333333,
            1.0
          ],
          "0,3": [
            1.0,
            1.0,
            1.0
          ],
          "1,2": [
            1.0,
            1.0,
            1.0
          ],
          "1,3": [
            5.0,
            7.0,
            9.0
          ],
          "2,3": [
            5.0,
            7.0,
            9.0
          ]
        },
        "cells_set": 6,
        "cells_total": 6,
        "complete": true,
        "size": 4
      }
    },
    "mode": "fuzzy",
    "updated": 1786200060.194723
  },
  "inconsistent_submit": {
    "cells_set": 3,
    "cells_total": 6,
    "completion": "0.5000",
    "consistency": {
      "ci": "3.5556",
      "consistent": false,
      "cr": "6.1303",
      "lambda_max": "10.1111",
      "warning": "judgments are inconsistent (CR > 0.10); consider revising"
    },
    "matrix": "criteria",
    "matrix_cells_set": 3,
    "matrix_cells_total": 3,
    "matrix_complete": true
  },
  "solve_crisp_geomean": {
    "alternatives": [
      "A1 Expert Judgment",
      "A2 COCOMO",
      "A3 Fuzzy Neural Network"
    ],
    "criteria": [
      "C1 Reliability",
      "C2 MMRE",
      "C3 Pred",
      "C4 Uncertainty"
    ],
    "criteria_weights": [
      "0.0931",
      "0.4456",
      "0.3921",
      "0.0692"
    ],
    "diagnostics": {
      "C1 Reliability": {
        "ci": "0.0678",
        "consistent": false,
        "cr": "0.1169",
        "lambda_max": "3.1356"
      },
      "C2 MMRE": {
        "ci": "0.0678",
        "consistent": false,
        "cr": "0.1169",
        "lambda_max": "3.1356"
      },
      "C3 Pred": {
        "ci": "0.0678",
        "consistent": false,
        "cr": "0.1169",
        "lambda_max": "3.1356"
      },
      "C4 Uncertainty": {
        "ci": "0.2178",
        "consistent": false,
        "cr": "0.3756",
        "lambda_max": "3.4357"
      },
      "criteria": {
        "ci": "0.0230",
        "consistent": true,
        "cr": "0.0256",
        "lambda_max": "4.0690"
      }
    },
    "global_scores": [
      "0.3217",
      "0.2476",
      "0.4307"
    ],
    "local_weights": {
      "C1 Reliability": [
        "0.0856",
        "0.6175",
        "0.2969"
      ],
      "C2 MMRE": [
        "0.3189",
        "0.2211",
        "0.4600"
      ],
      "C3 Pred": [
        "0.3189",
        "0.2211",
        "0.4600"
      ],
      "C4 Uncertainty": [
        "0.6724",
        "0.0703",
        "0.2573"
      ]
    },
    "method": "geometric-mean",
    "rank_order": [
      2,
      0,
      1
    ],
    "ranking": [
      "A3 Fuzzy Neural Network",
      "A1 Expert Judgment",
      "A2 COCOMO"
    ]
  },
  "solve_fuzzy_extent": {
    "alternatives": [
      "A1 Expert Judgment",
      "A2 COCOMO",
      "A3 Fuzzy Neural Network"
    ],
    "criteria": [
      "C1 Reliability",
      "C2 MMRE",
      "C3 Pred",
      "C4 Uncertainty"
    ],
    "criteria_weights": [
      "0.0000",
      "0.5331",
      "0.4669",
      "0.0000"
    ],
    "diagnostics": null,
    "global_scores": [
      "0.2343",
      "0.1958",
      "0.5699"
    ],
    "local_weights": {
      "C1 Reliability": [
        "0.0000",
        "0.5548",
        "0.4452"
      ],
      "C2 MMRE": [
        "0.2343",
        "0.1958",
        "0.5699"
      ],
      "C3 Pred": [
        "0.2343",
        "0.1958",
        "0.5699"
      ],
      "C4 Uncertainty": [
        "0.5649",
        "0.4351",
        "0.0000"
      ]
    },
    "method": "extent",
    "rank_order": [
      2,
      0,
      1
    ],
    "ranking": [
      "A3 Fuzzy Neural Network",
      "A1 Expert Judgment",
      "A2 COCOMO"
    ]
  },
  "solve_fuzzy_moderate": {
    "alternatives": [
      "A1 Expert Judgment",
      "A2 COCOMO",
      "A3 Fuzzy Neural Network"
    ],
    "criteria": [
      "C1 Reliability",
      "C2 MMRE",
      "C3 Pred",
      "C4 Uncertainty"
    ],
    "criteria_weights": [
      "0.0931",
      "0.4456",
      "0.3921",
      "0.0692"
    ],
    "diagnostics": {
      "C1 Reliability": {
        "ci": "0.0678",
        "consistent": false,
        "cr": "0.1169",
        "lambda_max": "3.1356"
      },
      "C2 MMRE": {
        "ci": "0.0678",
        "consistent": false,
        "cr": "0.1169",
        "lambda_max": "3.1356"
      },
      "C3 Pred": {
        "ci": "0.0678",
        "consistent": false,
        "cr": "0.1169",
        "lambda_max": "3.1356"
      },
      "C4 Uncertainty": {
        "ci": "0.2178",
        "consistent": false,
        "cr": "0.3756",
        "lambda_max": "3.4357"
      },
      "criteria": {
        "ci": "0.0230",
        "consistent": true,
        "cr": "0.0256",
        "lambda_max": "4.0690"
      }
    },
    "global_scores": [
      "0.3217",
      "0.2605",
      "0.4178"
    ],
    "local_weights": {
      "C1 Reliability": [
        "0.0856",
        "0.6175",
        "0.2969"
      ],
      "C2 MMRE": [
        "0.3189",
        "0.2211",
        "0.4600"
      ],
      "C3 Pred": [
        "0.3189",
        "0.2211",
        "0.4600"
      ],
      "C4 Uncertainty": [
        "0.6724",
        "0.2573",
        "0.0703"
      ]
    },
    "method": "attitude:moderate",
    "rank_order": [
      2,
      0,
      1
    ],
    "ranking": [
      "A3 Fuzzy Neural Network",
      "A1 Expert Judgment",
      "A2 COCOMO"
    ]
  },
  "solve_fuzzy_optimistic": {
    "alternatives": [
      "A1 Expert Judgment",
      "A2 COCOMO",
      "A3 Fuzzy Neural Network"
    ],
    "criteria": [
      "C1 Reliability",
      "C2 MMRE",
      "C3 Pred",
      "C4 Uncertainty"
    ],
    "criteria_weights": [
      "0.1488",
      "0.4465",
      "0.3393",
      "0.0653"
    ],
    "diagnostics": {
      "C1 Reliability": {
        "ci": "0.1474",
        "consistent": false,
        "cr": "0.2541",
        "lambda_max": "3.2948"
      },
      "C2 MMRE": {
        "ci": "0.0000",
        "consistent": true,
        "cr": "0.0000",
        "lambda_max": "3.0000"
      },
      "C3 Pred": {
        "ci": "0.0000",
        "consistent": true,
        "cr": "0.0000",
        "lambda_max": "3.0000"
      },
      "C4 Uncertainty": {
        "ci": "0.2804",
        "consistent": false,
        "cr": "0.4835",
        "lambda_max": "3.5608"
      },
      "criteria": {
        "ci": "0.1620",
        "consistent": false,
        "cr": "0.1800",
        "lambda_max": "4.4859"
      }
    },
    "global_scores": [
      "0.3286",
      "0.3730",
      "0.2984"
    ],
    "local_weights": {
      "C1 Reliability": [
        "0.1268",
        "0.6506",
        "0.2225"
      ],
      "C2 MMRE": [
        "0.3333",
        "0.3333",
        "0.3333"
      ],
      "C3 Pred": [
        "0.3333",
        "0.3333",
        "0.3333"
      ],
      "C4 Uncertainty": [
        "0.7322",
        "0.2176",
        "0.0503"
      ]
    },
    "method": "attitude:optimistic",
    "rank_order": [
      1,
      0,
      2
    ],
    "ranking": [
      "A2 COCOMO",
      "A1 Expert Judgment",
      "A3 Fuzzy Neural Network"
    ]
  },
  "solve_fuzzy_pessimistic": {
    "alternatives": [
      "A1 Expert Judgment",
      "A2 COCOMO",
      "A3 Fuzzy Neural Network"
    ],
    "criteria": [
      "C1 Reliability",
      "C2 MMRE",
      "C3 Pred",
      "C4 Uncertainty"
    ],
    "criteria_weights": [
      "0.0744",
      "0.4401",
      "0.4046",
      "0.0809"
    ],
    "diagnostics": {
      "C1 Reliability": {
        "ci": "0.0000",
        "consistent": true,
        "cr": "0.0000",
        "lambda_max": "3.0000"
      },
      "C2 MMRE": {
        "ci": "0.1474",
        "consistent": false,
        "cr": "0.2541",
        "lambda_max": "3.2948"
      },
      "C3 Pred": {
        "ci": "0.1474",
        "consistent": false,
        "cr": "0.2541",
        "lambda_max": "3.2948"
      },
      "C4 Uncertainty": {
        "ci": "0.1474",
        "consistent": false,
        "cr": "0.2541",
        "lambda_max": "3.2948"
      },
      "criteria": {
        "ci": "0.0047",
        "consistent": true,
        "cr": "0.0053",
        "lambda_max": "4.0142"
      }
    },
    "global_scores": [
      "0.3072",
      "0.2108",
      "0.4820"
    ],
    "local_weights": {
      "C1 Reliability": [
        "0.0667",
        "0.4667",
        "0.4667"
      ],
      "C2 MMRE": [
        "0.3035",
        "0.1775",
        "0.5190"
      ],
      "C3 Pred": [
        "0.3035",
        "0.1775",
        "0.5190"
      ],
      "C4 Uncertainty": [
        "0.5666",
        "0.3230",
        "0.1104"
      ]
    },
    "method": "attitude:pessimistic",
    "rank_order": [
      2,
      0,
      1
    ],
    "ranking": [
      "A3 Fuzzy Neural Network",
      "A1 Expert Judgment",
      "A2 COCOMO"
    ]
  },
  "submit_sequence": [
    {
      "cells_set": 1,
      "cells_total": 18,
      "completion": "0.0556",
      "consistency": null,
      "matrix": "criteria",
      "matrix_cells_set": 1,
      "matrix_cells_total": 6,
      "matrix_complete": false
    },
    {
      "cells_set": 2,
      "cells_total": 18,
      "completion": "0.1111",
      "consistency": null,
      "matrix": "criteria",
      "matrix_cells_set": 2,
      "matrix_cells_total": 6,
      "matrix_complete": false
    },
    {
      "cells_set": 3,
      "cells_total": 18,
      "completion": "0.1667",
      "consistency": null,
      "matrix": "criteria",
      "matrix_cells_set": 3,
      "matrix_cells_total": 6,
      "matrix_complete": false
    },
    {
      "cells_set": 4,
      "cells_total": 18,
      "completion": "0.2222",
      "consistency": null,
      "matrix": "criteria",
      "matrix_cells_set": 4,
      "matrix_cells_total": 6,
      "matrix_complete": false
    },
    {
      "cells_set": 5,
      "cells_total": 18,
      "completion": "0.2778",
      "consistency": null,
      "matrix": "criteria",
      "matrix_cells_set": 5,
      "matrix_cells_total": 6,
      "matrix_complete": false
    },
    {
      "cells_set": 6,
      "cells_total": 18,
      "completion": "0.3333",
      "consistency": {
        "ci": "0.0230",
        "consistent": true,
        "cr": "0.0256",
        "lambda_max": "4.0690"
      },
      "matrix": "criteria",
      "matrix_cells_set": 6,
      "matrix_cells_total": 6,
      "matrix_complete": true
    }
  ]
};
