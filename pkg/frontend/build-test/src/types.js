// Wire types for the decision-service JSON API.  Every numeric weight or
// score arrives as a 4-decimal string and is displayed verbatim; the client
// never recomputes weights.
export {};
