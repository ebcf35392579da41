#include "ectff/diffset.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ectff {

GroupSubset::GroupSubset(GroupSpec group, std::vector<long long> indices)
    : group_(std::move(group)), indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    if (indices_.empty()) throw std::invalid_argument("subset must be nonempty");
    if (indices_.front() < 0 || indices_.back() >= group_.order())
        throw std::out_of_range("subset element outside group");
}

GroupSubset GroupSubset::parse(const GroupSpec& group, std::string_view literal) {
    // Elements with comma-bearing literals (multi-factor groups with a factor > 2)
    // are separated by ';'; otherwise ',' separates elements.
    bool element_has_comma = !group.is_exponent_two() && group.num_factors() > 1;
    char sep = element_has_comma ? ';' : ',';
    std::vector<long long> indices;
    std::string tok;
    std::stringstream ss{std::string(literal)};
    while (std::getline(ss, tok, sep)) {
        if (!tok.empty()) indices.push_back(group.parse_element(tok));
    }
    return GroupSubset(group, std::move(indices));
}

GroupSubset GroupSubset::full(const GroupSpec& group) {
    std::vector<long long> all(static_cast<std::size_t>(group.order()));
    for (long long i = 0; i < group.order(); ++i) all[static_cast<std::size_t>(i)] = i;
    return GroupSubset(group, std::move(all));
}

bool GroupSubset::contains(long long index) const {
    return std::binary_search(indices_.begin(), indices_.end(), index);
}

GroupSubset GroupSubset::complement() const {
    std::vector<long long> out;
    out.reserve(static_cast<std::size_t>(group_.order()) - indices_.size());
    for (long long i = 0; i < group_.order(); ++i)
        if (!contains(i)) out.push_back(i);
    return GroupSubset(group_, std::move(out));
}

GroupSubset GroupSubset::translate(long long g) const {
    std::vector<long long> out;
    out.reserve(indices_.size());
    for (long long i : indices_) out.push_back(group_.add(i, g));
    return GroupSubset(group_, std::move(out));
}

GroupSubset GroupSubset::apply_automorphism(const std::vector<long long>& sigma) const {
    if (!is_additive_bijection(group_, sigma))
        throw std::invalid_argument("permutation is not a group automorphism");
    std::vector<long long> out;
    out.reserve(indices_.size());
    for (long long i : indices_) out.push_back(sigma[static_cast<std::size_t>(i)]);
    return GroupSubset(group_, std::move(out));
}

std::string GroupSubset::literal() const {
    bool element_has_comma = !group_.is_exponent_two() && group_.num_factors() > 1;
    char sep = element_has_comma ? ';' : ',';
    std::string out;
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (i) out.push_back(sep);
        out += group_.element_literal(indices_[i]);
    }
    return out;
}

std::vector<GroupElement> GroupSubset::elements() const {
    std::vector<GroupElement> out;
    out.reserve(indices_.size());
    for (long long i : indices_) out.push_back(group_.coords_of(i));
    return out;
}

std::vector<std::int64_t> autocorrelation(const GroupSubset& subset) {
    const GroupSpec& g = subset.group();
    std::vector<std::int64_t> counts(static_cast<std::size_t>(g.order()), 0);
    for (long long a : subset.indices())
        for (long long b : subset.indices())
            ++counts[static_cast<std::size_t>(g.add(a, g.negate(b)))];
    return counts;
}

DifferenceSetCertificate is_difference_set(const GroupSubset& subset, const Tolerance& tol) {
    const GroupSpec& g = subset.group();
    long long n = g.order();
    if (n <= 1) throw std::invalid_argument("difference sets need group order > 1");
    auto counts = autocorrelation(subset);
    std::int64_t d = static_cast<std::int64_t>(subset.size());
    Rational lambda(d * (d - 1), n - 1);

    bool ac_verdict = true;
    std::optional<long long> witness;
    for (long long i = 1; i < n; ++i) {
        if (Rational(counts[static_cast<std::size_t>(i)]) != lambda) {
            ac_verdict = false;
            witness = i;
            break;
        }
    }

    // Independent route: every nontrivial DFT value must have squared modulus
    // D(N-D)/(N-1).
    Rational target(d * (n - d), n - 1);
    bool dft_verdict = true;
    if (g.is_exponent_two()) {
        std::vector<std::int64_t> chi(static_cast<std::size_t>(n), 0);
        for (long long i : subset.indices()) chi[static_cast<std::size_t>(i)] = 1;
        auto hat = dft_exact(g, chi);
        for (long long i = 1; i < n && dft_verdict; ++i) {
            std::int64_t v = hat[static_cast<std::size_t>(i)];
            if (Rational(checked_mul(v, v)) != target) dft_verdict = false;
        }
    } else {
        std::vector<std::complex<double>> chi(static_cast<std::size_t>(n), 0.0);
        for (long long i : subset.indices()) chi[static_cast<std::size_t>(i)] = 1.0;
        auto hat = dft(g, chi);
        double bound = tol.abs + tol.rel * static_cast<double>(d) * static_cast<double>(d);
        for (long long i = 1; i < n && dft_verdict; ++i) {
            if (std::abs(std::norm(hat[static_cast<std::size_t>(i)]) - target.as_double()) > bound)
                dft_verdict = false;
        }
    }
    if (ac_verdict != dft_verdict)
        throw std::logic_error("difference-set criteria disagree");

    return DifferenceSetCertificate{subset, lambda, ac_verdict, witness, std::move(counts)};
}

bool is_additive_bijection(const GroupSpec& group, const std::vector<long long>& sigma) {
    long long n = group.order();
    if (static_cast<long long>(sigma.size()) != n) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (long long v : sigma) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    if (sigma[0] != 0) return false;
    for (long long a = 0; a < n; ++a)
        for (long long b = a; b < n; ++b)
            if (sigma[static_cast<std::size_t>(group.add(a, b))] !=
                group.add(sigma[static_cast<std::size_t>(a)], sigma[static_cast<std::size_t>(b)]))
                return false;
    return true;
}

std::vector<long long> automorphism_from_binary_matrix(const GroupSpec& group,
                                                       const std::vector<std::vector<int>>& mat) {
    if (!group.is_exponent_two())
        throw std::invalid_argument("binary-matrix automorphisms need an exponent-2 group");
    int k = group.num_factors();
    std::vector<long long> sigma(static_cast<std::size_t>(group.order()));
    for (long long i = 0; i < group.order(); ++i) {
        GroupElement x = group.coords_of(i);
        GroupElement y(k, 0);
        for (int r = 0; r < k; ++r) {
            int acc = 0;
            for (int c = 0; c < k; ++c) acc ^= (mat[r][c] & 1) & x[c] ? 1 : 0;
            y[r] = acc;
        }
        sigma[static_cast<std::size_t>(i)] = group.index_of(y);
    }
    if (!is_additive_bijection(group, sigma))
        throw std::invalid_argument("binary matrix is not invertible");
    return sigma;
}

namespace {

int binary_rank(std::vector<std::vector<int>> m) {
    int k = static_cast<int>(m.size());
    int rank = 0;
    for (int c = 0; c < k; ++c) {
        int pivot = -1;
        for (int r = rank; r < k; ++r)
            if (m[r][c] & 1) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[rank]);
        for (int r = 0; r < k; ++r)
            if (r != rank && (m[r][c] & 1))
                for (int cc = 0; cc < k; ++cc) m[r][cc] ^= m[rank][cc];
        ++rank;
    }
    return rank;
}

std::vector<std::vector<int>> binary_inverse(std::vector<std::vector<int>> m) {
    int k = static_cast<int>(m.size());
    std::vector<std::vector<int>> inv(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i) inv[i][i] = 1;
    int rank = 0;
    for (int c = 0; c < k; ++c) {
        int pivot = -1;
        for (int r = rank; r < k; ++r)
            if (m[r][c] & 1) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::invalid_argument("binary matrix is singular");
        std::swap(m[pivot], m[rank]);
        std::swap(inv[pivot], inv[rank]);
        for (int r = 0; r < k; ++r)
            if (r != rank && (m[r][c] & 1))
                for (int cc = 0; cc < k; ++cc) {
                    m[r][cc] ^= m[rank][cc];
                    inv[r][cc] ^= inv[rank][cc];
                }
        ++rank;
    }
    return inv;
}

std::vector<std::vector<int>> binary_product(const std::vector<std::vector<int>>& a,
                                             const std::vector<std::vector<int>>& b) {
    int k = static_cast<int>(a.size());
    std::vector<std::vector<int>> out(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int l = 0; l < k; ++l)
            if (a[i][l] & 1)
                for (int j = 0; j < k; ++j) out[i][j] ^= b[l][j] & 1;
    return out;
}

std::vector<std::vector<int>> binary_transpose(const std::vector<std::vector<int>>& a) {
    int k = static_cast<int>(a.size());
    std::vector<std::vector<int>> out(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) out[j][i] = a[i][j] & 1;
    return out;
}

}  // namespace

std::vector<std::vector<int>> random_invertible_binary_matrix(int dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> m(dim, std::vector<int>(dim, 0));
    do {
        for (auto& row : m)
            for (auto& v : row) v = static_cast<int>(rng() & 1);
    } while (binary_rank(m) != dim);
    return m;
}

std::vector<long long> induced_dual_automorphism(const GroupSpec& group, const PairingForm& form,
                                                 const std::vector<std::vector<int>>& sigma_matrix) {
    if (!group.is_exponent_two())
        throw std::invalid_argument("induced dual automorphisms implemented for 2-groups only");
    // pairing(sigma^{-1} x, y) = x^T sigma^{-T} B y, so tau = B^{-1} sigma^{-T} B.
    auto b = form.matrix();
    auto sigma_inv_t = binary_transpose(binary_inverse(sigma_matrix));
    auto tau = binary_product(binary_inverse(b), binary_product(sigma_inv_t, b));
    return automorphism_from_binary_matrix(group, tau);
}

DifferenceSetEnumerator::DifferenceSetEnumerator(GroupSpec group, int size,
                                                 EnumerationOptions options)
    : group_(std::move(group)), size_(size), options_(options) {
    long long n = group_.order();
    if (size_ < 1 || size_ > n) throw std::invalid_argument("difference-set size out of range");
    Rational lambda(static_cast<std::int64_t>(size_) * (size_ - 1), n - 1);
    if (!lambda.is_integer()) {
        feasible_ = false;  // integrality filter: empty stream
        return;
    }
    lambda_ = lambda.as_integer();
    diff_counts_.assign(static_cast<std::size_t>(n), 0);
    for (long long i = 0; i < n; ++i) candidate_order_.push_back(i);
    if (options_.reverse_order) {
        // 0 must stay first so translation-canonical mode is unaffected.
        std::reverse(candidate_order_.begin() + (options_.up_to_translation ? 1 : 0),
                     candidate_order_.end());
    }
}

bool DifferenceSetEnumerator::push(long long elem) {
    // A size-D difference set has every nonzero difference count <= lambda;
    // abandon the prefix as soon as any count overshoots.
    std::size_t done = 0;
    bool ok = true;
    for (std::size_t i = 0; i < stack_.size(); ++i) {
        long long d1 = group_.add(elem, group_.negate(stack_[i]));
        long long d2 = group_.negate(d1);
        ++diff_counts_[static_cast<std::size_t>(d1)];
        ++diff_counts_[static_cast<std::size_t>(d2)];
        ++done;
        if (diff_counts_[static_cast<std::size_t>(d1)] > lambda_ ||
            diff_counts_[static_cast<std::size_t>(d2)] > lambda_) {
            ok = false;
            break;
        }
    }
    if (!ok) {
        for (std::size_t i = 0; i < done; ++i) {
            long long d1 = group_.add(elem, group_.negate(stack_[i]));
            --diff_counts_[static_cast<std::size_t>(d1)];
            --diff_counts_[static_cast<std::size_t>(group_.negate(d1))];
        }
        return false;
    }
    stack_.push_back(elem);
    return true;
}

void DifferenceSetEnumerator::pop() {
    long long elem = stack_.back();
    stack_.pop_back();
    for (long long prev : stack_) {
        long long d1 = group_.add(elem, group_.negate(prev));
        --diff_counts_[static_cast<std::size_t>(d1)];
        --diff_counts_[static_cast<std::size_t>(group_.negate(d1))];
    }
}

bool DifferenceSetEnumerator::is_translation_canonical(const std::vector<long long>& set) const {
    std::vector<long long> base(set);
    std::sort(base.begin(), base.end());
    for (long long t : base) {
        if (t == 0) continue;
        std::vector<long long> shifted;
        shifted.reserve(base.size());
        for (long long v : base) shifted.push_back(group_.add(v, group_.negate(t)));
        std::sort(shifted.begin(), shifted.end());
        if (shifted < base) return false;
    }
    return true;
}

std::optional<GroupSubset> DifferenceSetEnumerator::next() {
    if (!feasible_ || emitted_ >= options_.max_results) return std::nullopt;
    long long n = group_.order();

    // Depth-first over candidate positions; cursor_[d] is the position in
    // candidate_order_ used at depth d.
    if (!started_) {
        started_ = true;
        cursor_.assign(1, 0);
    } else if (stack_.empty()) {
        return std::nullopt;
    } else {
        pop();
        ++cursor_.back();
    }

    while (true) {
        if (nodes_ >= options_.max_nodes) {
            budget_exceeded_ = true;
            return std::nullopt;
        }
        if (cursor_.empty()) return std::nullopt;
        std::size_t depth = cursor_.size() - 1;
        long long remaining_needed = size_ - static_cast<long long>(stack_.size());
        bool advanced = false;
        // Positions strictly increase along a path, so each set is visited once
        // regardless of the candidate permutation.
        for (std::size_t& pos = cursor_.back(); pos < candidate_order_.size(); ++pos) {
            long long cand = candidate_order_[pos];
            if (options_.up_to_translation && depth == 0 && cand != 0) break;
            if (static_cast<long long>(candidate_order_.size() - pos) < remaining_needed) break;
            ++nodes_;
            if (!push(cand)) continue;
            advanced = true;
            break;
        }
        if (!advanced) {
            cursor_.pop_back();
            if (cursor_.empty()) return std::nullopt;
            pop();
            ++cursor_.back();
            continue;
        }
        if (static_cast<int>(stack_.size()) == size_) {
            bool complete = true;
            for (long long i = 1; i < n && complete; ++i)
                if (diff_counts_[static_cast<std::size_t>(i)] != lambda_) complete = false;
            bool canonical =
                !options_.up_to_translation || is_translation_canonical(stack_);
            if (complete && canonical) {
                ++emitted_;
                return GroupSubset(group_, stack_);
            }
            pop();
            ++cursor_.back();
        } else {
            cursor_.push_back(cursor_.back() + 1);
        }
    }
}

std::vector<GroupSubset> enumerate_difference_sets(const GroupSpec& group, int size,
                                                   bool up_to_translation, std::uint64_t limit) {
    EnumerationOptions opt;
    opt.up_to_translation = up_to_translation;
    opt.max_results = limit;
    DifferenceSetEnumerator e(group, size, opt);
    std::vector<GroupSubset> out;
    while (auto s = e.next()) out.push_back(*s);
    return out;
}

GroupSubset translation_canonical(const GroupSubset& subset) {
    const GroupSpec& g = subset.group();
    std::vector<long long> best;
    for (long long t : subset.indices()) {
        std::vector<long long> shifted;
        shifted.reserve(subset.size());
        for (long long v : subset.indices()) shifted.push_back(g.add(v, g.negate(t)));
        std::sort(shifted.begin(), shifted.end());
        if (best.empty() || shifted < best) best = std::move(shifted);
    }
    return GroupSubset(g, std::move(best));
}

}  // namespace ectff
