#pragma once

// The formula-vs-oracle ledger: every closed form with a computable
// counterpart is evaluated next to a brute-force count on its defining
// coloring. Mismatched rows are data (several displays disagree with their
// own constructions), so emitting the ledger never fails; consumers decide
// what a mismatch means.

#include <sstream>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "formulas.hpp"
#include "patterns.hpp"

#include <json.hpp>

namespace gallai {

struct LedgerRow {
    std::string formula;
    std::string params;
    std::string variant;
    std::string formula_value;
    std::string oracle_value;
    bool match = false;
};

inline std::vector<LedgerRow> formula_oracle_ledger() {
    std::vector<LedgerRow> rows;
    auto add = [&](const std::string& f, const std::string& p, const std::string& var,
                   const BigInt& fv, long long ov) {
        rows.push_back({f, p, var, fv.get_str(), std::to_string(ov), fv == BigInt(ov)});
    };
    // matching-count displays vs brute-force counts on the rainbow-matching coloring
    for (int k = 3; k <= 5; ++k) {
        auto c = construct_lemcount(k);
        auto by_size = matchings_by_size(c, 1);
        for (int i = 0; i <= std::min(4, k); ++i) {
            long long oracle = i < static_cast<int>(by_size.size()) ? by_size[i] : 0;
            add("lemcount", "k=" + std::to_string(k) + ",i=" + std::to_string(i), "statement",
                lemcount_formula(k, i, LemcountVariant::statement), oracle);
            add("lemcount", "k=" + std::to_string(k) + ",i=" + std::to_string(i), "proof",
                lemcount_formula(k, i, LemcountVariant::proof), oracle);
        }
    }
    // multiplicity upper-bound displays vs direct counts at the smallest
    // admissible parameters (k=5 forces n = 2k-4 = 6)
    {
        auto c = construct_prop_k2n(5, 6);
        auto by_size = matchings_by_size(c, 1);
        long long oracle = 6 < static_cast<int>(by_size.size()) ? by_size[6] : 0;
        add("gm-p5-upper-small", "k=5,n=6", "", gm_p5_upper_small(5, 6), oracle);
    }
    {
        auto c = construct_thm_k3n1(5, 6);
        auto by_size = matchings_by_size(c, 1);
        long long oracle = 6 < static_cast<int>(by_size.size()) ? by_size[6] : 0;
        add("gm-p5-upper-large", "k=5,n=6", "", gm_p5_upper_large(5, 6), oracle);
    }
    // the broom tally counts each 2-matching once per constituent edge
    for (int m = 2; m <= 6; ++m)
        for (int ell = 0; ell <= 4; ++ell)
            add("broom-2k2", "m=" + std::to_string(m) + ",ell=" + std::to_string(ell), "",
                broom_two_matchings_formula(m, ell), 2 * count_two_matchings_in_broom(m, ell));
    // closed form for perfect matchings vs the subset DP
    for (int n1 = 1; n1 <= 5; ++n1) {
        auto mono = monochromatic_complete(2 * n1);
        auto by_size = matchings_by_size(mono, 1);
        add("stripes-bound", "n1=" + std::to_string(n1), "", stripes_multiplicity_bound(n1),
            by_size[n1]);
    }
    return rows;
}

inline std::string ledger_csv(const std::vector<LedgerRow>& rows) {
    std::ostringstream os;
    os << "formula,params,variant,formula_value,oracle_value,match\n";
    for (const auto& r : rows)
        os << r.formula << ",\"" << r.params << "\"," << r.variant << "," << r.formula_value << ","
           << r.oracle_value << "," << (r.match ? "yes" : "no") << "\n";
    return os.str();
}

inline nlohmann::json ledger_json(const std::vector<LedgerRow>& rows) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows)
        j.push_back({{"formula", r.formula},
                     {"params", r.params},
                     {"variant", r.variant},
                     {"formula_value", r.formula_value},
                     {"oracle_value", r.oracle_value},
                     {"match", r.match}});
    return j;
}

} // namespace gallai
