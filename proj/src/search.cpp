#include "ectff/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

namespace ectff {

namespace {

bool divides(std::int64_t a, std::int64_t b) { return a != 0 && b % a == 0; }

std::optional<std::int64_t> integral_rank(std::int64_t d, std::int64_t e, std::int64_t n) {
    std::int64_t den = (d + e - 1) * n - d * e;
    if (den <= 0) return std::nullopt;
    std::int64_t num = d * e * (n - 1);
    if (num % den != 0) return std::nullopt;
    return num / den;
}

std::int64_t scan_count(std::int64_t max_n, ESideRule rule, std::vector<FeasibleTriple>* out) {
    std::int64_t count = 0;
    for (std::int64_t n = 3; n <= max_n; ++n) {
        for (std::int64_t d = 2; d < n; ++d) {
            if (!divides(n - 1, d * (d - 1))) continue;
            for (std::int64_t e = d; e < n; ++e) {
                std::int64_t emod = rule == ESideRule::OverNMinus1 ? n - 1 : n;
                if (!divides(emod, e * (e - 1))) continue;
                auto r = integral_rank(d, e, n);
                if (!r) continue;
                ++count;
                if (out) out->push_back(FeasibleTriple{d, e, n, *r, d + e == n});
            }
        }
    }
    return count;
}

}  // namespace

ScanReport scan_triples(std::int64_t max_n, std::optional<ESideRule> rule) {
    if (max_n < 2) throw std::invalid_argument("scan needs maxN >= 2");
    ScanReport report;
    report.max_n = max_n;
    // The E-side condition printed in the source material reads E(E-1)/N, but
    // that rule rejects the known (6,10,16) family; the matching rule is the
    // difference-set integrality condition over N-1.
    report.rule = rule.value_or(ESideRule::OverNMinus1);
    report.count_over_n_minus_1 = scan_count(max_n, ESideRule::OverNMinus1, nullptr);
    report.count_over_n = scan_count(max_n, ESideRule::OverN, nullptr);
    scan_count(max_n, report.rule, &report.triples);
    std::sort(report.triples.begin(), report.triples.end(),
              [](const FeasibleTriple& a, const FeasibleTriple& b) {
                  return std::tie(a.n, a.d, a.e) < std::tie(b.n, b.d, b.e);
              });
    return report;
}

namespace {

void partitions_desc(int n, int max_part, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_desc(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<GroupSpec> enumerate_abelian_groups(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("group order must be >= 2");
    std::vector<std::pair<std::int64_t, int>> factorization;
    std::int64_t rest = n;
    for (std::int64_t p = 2; p * p <= rest; ++p) {
        if (rest % p) continue;
        int a = 0;
        while (rest % p == 0) {
            rest /= p;
            ++a;
        }
        factorization.emplace_back(p, a);
    }
    if (rest > 1) factorization.emplace_back(rest, 1);

    // Partitions of each exponent give the cyclic p-power factors.
    std::vector<std::vector<std::vector<int>>> per_prime;
    for (auto [p, a] : factorization) {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        partitions_desc(a, a, cur, parts);
        per_prime.push_back(std::move(parts));
    }

    std::vector<GroupSpec> out;
    std::vector<std::size_t> pick(per_prime.size(), 0);
    while (true) {
        std::vector<int> factors;
        for (std::size_t i = 0; i < per_prime.size(); ++i) {
            std::int64_t p = factorization[i].first;
            for (int part : per_prime[i][pick[i]]) {
                std::int64_t f = 1;
                for (int k = 0; k < part; ++k) f *= p;
                factors.push_back(static_cast<int>(f));
            }
        }
        std::sort(factors.begin(), factors.end());
        out.emplace_back(std::move(factors));
        std::size_t i = per_prime.size();
        while (i > 0) {
            --i;
            if (++pick[i] < per_prime[i].size()) break;
            pick[i] = 0;
            if (i == 0) return out;
        }
        if (per_prime.empty()) return out;
    }
}

FeasibilityResult feasibility_filter(std::int64_t d, std::int64_t e, std::int64_t n) {
    FeasibilityResult res;
    res.pass = true;
    if (n < 2 || d < 1 || e < 1 || d > n || e > n) {
        res.pass = false;
        res.reasons.push_back("parameters out of range");
        return res;
    }
    if (!divides(n - 1, d * (d - 1))) {
        res.pass = false;
        res.reasons.push_back("D(D-1)/(N-1) not integral");
    }
    if (!divides(n - 1, e * (e - 1))) {
        res.pass = false;
        res.reasons.push_back("E(E-1)/(N-1) not integral");
    }
    if (!integral_rank(d, e, n)) {
        res.pass = false;
        res.reasons.push_back("R not integral");
    }
    if (d < n && e < n && d + e > n) {
        res.pass = false;
        res.reasons.push_back("D+E > N violates the necessary condition");
    }
    return res;
}

SearchReport search_pds(const GroupSpec& group, int d_size, int e_size,
                        const SearchOptions& options) {
    auto start = std::chrono::steady_clock::now();
    SearchReport report{group, d_size, e_size, false, {}, {}, 0, 0, 0, false, 0.0,
                        options.max_nodes_per_side, options.max_class_pairs};

    FeasibilityResult feas = feasibility_filter(d_size, e_size, group.order());
    report.feasible = feas.pass;
    report.infeasible_reasons = feas.reasons;
    if (!feas.pass) {
        report.exhaustive = true;
        report.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }

    EnumerationOptions eopt;
    eopt.up_to_translation = true;
    eopt.max_nodes = options.max_nodes_per_side;
    eopt.reverse_order = options.reverse_order;

    DifferenceSetEnumerator d_enum(group, d_size, eopt);
    std::vector<GroupSubset> d_classes;
    while (auto s = d_enum.next()) d_classes.push_back(*s);
    DifferenceSetEnumerator e_enum(group, e_size, eopt);
    std::vector<GroupSubset> e_classes;
    while (auto s = e_enum.next()) e_classes.push_back(*s);
    report.d_classes = d_classes.size();
    report.e_classes = e_classes.size();
    bool within_budget = d_enum.exhausted_fairly() && e_enum.exhausted_fairly();

    PairingForm form = PairingForm::standard(group);
    std::map<std::pair<std::vector<long long>, std::vector<long long>>, FoundPair> found;
    std::uint64_t tested = 0;
    bool capped = false;
    for (const GroupSubset& dset : d_classes) {
        for (const GroupSubset& eset : e_classes) {
            if (tested >= options.max_class_pairs) {
                capped = true;
                break;
            }
            ++tested;
            PairedDSCandidate candidate(group, form, dset, eset, options.tol);
            if (!options.include_trivial && candidate.trivial()) continue;
            PairedDSCertificate cert = is_paired_gram(candidate, options.tol);
            if (!cert.verdict) continue;
            CharsumResult cs = is_paired_charsum(candidate, options.tol);
            if (!cs.verdict)
                throw std::logic_error("Gram and character-sum criteria disagree in search");
            found.emplace(std::make_pair(dset.indices(), eset.indices()),
                          FoundPair{dset, eset, cert});
        }
        if (capped) break;
    }
    report.pairs_tested = tested;
    report.exhaustive = within_budget && !capped;
    for (auto& [key, pair] : found) report.pairs.push_back(std::move(pair));
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace ectff
