#pragma once

// The explicit combinatorial structure of M4 = cok(d2): the A/D basis
// catalogs with their index sets, the projection pi4 with its short exact
// sequence, the P submodule, and the p = 3 specializations.

#include <utility>
#include <vector>

#include "prism/int_matrix.hpp"
#include "prism/prism_seq.hpp"
#include "prism/report.hpp"

namespace prism {

struct BasisCatalog {
    int p = 0;
    // index sets as explicit (i, j) lists
    std::vector<std::pair<int, int>> j1, j2, j3, j3p;
    // M3 vectors in flat coordinates (rows)
    IntMatrix a1, a2, a3;        // |A1| = p^2-p+1, |A2| = 3p-2, |A3| = 1
    IntMatrix d1, d2, d3, d4, d5, d6;
    // stacked A (a1;a2;a3) and D (d1;..;d6)
    IntMatrix a_rows, d_rows;
    // p = 3 only: the fifteen-generator specialization and its 9 d2-images
    IntMatrix a_rows_p3, d_rows_p3;

    int a_count() const { return a_rows.rows(); }
    int d_count() const { return d_rows.rows(); }
};

BasisCatalog build_catalog(const PrismContext& ctx);

// pi4 on an M3 element: sum of slot-3 coset coordinates minus sum of
// slot-4 coset coordinates (the T_G multiple).
int64_t pi4_m3(const PrismContext& ctx, const PrismElement& x);
// pi4 on an M4 class (via the canonical representative)
int64_t pi4(const PrismContext& ctx, const PrismElement& x);

VerificationReport verify_basis(const PrismContext& ctx);
VerificationReport verify_ses_2_4(const PrismContext& ctx, int64_t modulus);
VerificationReport verify_cor_2_5_2_6_2_7(const PrismContext& ctx);
VerificationReport relations_p3(const PrismContext& ctx);

}  // namespace prism
