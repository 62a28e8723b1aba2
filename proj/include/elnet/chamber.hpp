#pragma once

#include "elnet/rational.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace elnet {

using Subset = std::set<int>;

struct ReducedWord {
    int n = 0;
    std::vector<int> letters;
};

// Validates that letters form a reduced word for the longest permutation.
ReducedWord reduced_word(int n, const std::vector<int>& letters);

struct ChamberData {
    Subset L;
    int i, j;
};

// k is 1-based. The suffix s_{h_{k+1}}, ..., s_{h_m} acts with s_{h_{k+1}} first.
ChamberData chamber_data(const ReducedWord& h, int k);
std::set<Subset> chamber_sets(const ReducedWord& h);
bool is_normalized(const Subset& s);

using ChamberVars = std::map<Subset, Rational>;

std::vector<Rational> ansatz_forward(const ChamberVars& mv, const ReducedWord& h);
ChamberVars ansatz_inverse(const std::vector<Rational>& chart, const ReducedWord& h);

enum class Relation { three_term, four_term };
bool check_relation(const ChamberVars& mv, Relation variant, int i, int j, int k, const Subset& L);

// Chart moves. Charts list factor parameters left to right.
enum class Gluing { lusztig, phi_check };
struct Chart {
    ReducedWord word;
    std::vector<Rational> values;
};
Chart braid_chart(const Chart& c, Gluing g, int position);
Chart commute_chart(const Chart& c, int position);

// check-phi charts feed the ansatz after the gauge r_k -> (-1)^{|L_k|} r_k.
std::vector<Rational> sign_gauge(const std::vector<Rational>& chart, const ReducedWord& h);
ChamberVars chart_vars(const Chart& c, Gluing g);

// Chamber variables of every chart reachable by braid and commutation moves,
// merged; disagreement on a shared subset raises ConsistencyError.
ChamberVars glued_vars(const Chart& start, Gluing g);

std::string subset_str(const Subset& s);
Subset parse_subset(const std::string& s);
std::string format_chamber_vars(const ChamberVars& mv);

}  // namespace elnet
