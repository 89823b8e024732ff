#pragma once

#include <vector>

namespace legcount {

// Built-in reference counts used by `verify` and the acceptance suite.
struct ReferenceRow {
    std::vector<long> conditions;  // (a_2, ..., a_{2n+1})
    long count;
};

struct ReferenceTable {
    int n;
    int d;
    std::vector<ReferenceRow> rows;
};

// Contact curves in P^3, degrees 1..3.
const ReferenceTable& reference_p3(int d);

// Contact curves in P^5, degrees 1..2. The degree-1 table lists 10 of the 11
// admissible condition vectors; (3,0,0,1) has no reference row.
const ReferenceTable& reference_p5(int d);

}  // namespace legcount
