#include "ectff/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ectff {

namespace {
constexpr double kTau = 6.283185307179586476925286766559;
}

std::complex<double> RootOfUnity::value() const {
    if (modulus <= 2) return {exponent == 0 ? 1.0 : -1.0, 0.0};
    if (modulus == 4) {
        switch (exponent) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    double arg = kTau * static_cast<double>(exponent) / static_cast<double>(modulus);
    return {std::cos(arg), std::sin(arg)};
}

std::int64_t RootOfUnity::sign_value() const {
    if (2 * exponent % modulus != 0) throw std::domain_error("root of unity is not +/-1");
    return exponent == 0 ? 1 : -1;
}

GroupSpec::GroupSpec(std::vector<int> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("group needs at least one factor");
    for (int f : factors_)
        if (f < 2) throw std::invalid_argument("every cyclic factor must be >= 2");
    exponent_ = 1;
    for (int f : factors_) {
        order_ = checked_mul(order_, f);
        exponent_ = static_cast<int>(std::lcm<long long>(exponent_, f));
    }
    strides_.assign(factors_.size(), 1);
    for (int j = static_cast<int>(factors_.size()) - 2; j >= 0; --j)
        strides_[j] = strides_[j + 1] * factors_[j + 1];
}

GroupSpec GroupSpec::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(c)));
    std::vector<int> factors;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != 'z') throw std::invalid_argument("bad group spec: expected 'Z'");
        ++pos;
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("bad group spec: missing order");
        int n = std::stoi(s.substr(start, pos - start));
        int rep = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) throw std::invalid_argument("bad group spec: missing exponent");
            rep = std::stoi(s.substr(start, pos - start));
        }
        for (int i = 0; i < rep; ++i) factors.push_back(n);
        if (pos < s.size()) {
            if (s[pos] != 'x') throw std::invalid_argument("bad group spec: expected 'x'");
            ++pos;
        }
    }
    return GroupSpec(factors);
}

GroupElement GroupSpec::coords_of(long long index) const {
    if (index < 0 || index >= order_) throw std::out_of_range("element index out of range");
    GroupElement coords(factors_.size());
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        coords[j] = static_cast<int>((index / strides_[j]) % factors_[j]);
    }
    return coords;
}

long long GroupSpec::index_of(const GroupElement& coords) const {
    if (coords.size() != factors_.size())
        throw std::invalid_argument("element coordinate count does not match group");
    long long index = 0;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        int c = coords[j];
        if (c < 0 || c >= factors_[j]) throw std::out_of_range("coordinate out of range");
        index += strides_[j] * c;
    }
    return index;
}

long long GroupSpec::add(long long a, long long b) const {
    long long out = 0;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        int ca = static_cast<int>((a / strides_[j]) % factors_[j]);
        int cb = static_cast<int>((b / strides_[j]) % factors_[j]);
        out += strides_[j] * ((ca + cb) % factors_[j]);
    }
    return out;
}

long long GroupSpec::negate(long long a) const {
    long long out = 0;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        int ca = static_cast<int>((a / strides_[j]) % factors_[j]);
        out += strides_[j] * ((factors_[j] - ca) % factors_[j]);
    }
    return out;
}

std::string GroupSpec::element_literal(long long index) const {
    GroupElement coords = coords_of(index);
    std::string out;
    if (is_exponent_two()) {
        for (int c : coords) out.push_back(static_cast<char>('0' + c));
        return out;
    }
    for (std::size_t j = 0; j < coords.size(); ++j) {
        if (j) out.push_back(',');
        out += std::to_string(coords[j]);
    }
    return out;
}

long long GroupSpec::parse_element(std::string_view text) const {
    GroupElement coords;
    if (is_exponent_two() && text.find(',') == std::string_view::npos) {
        if (text.size() != factors_.size())
            throw std::invalid_argument("element literal length does not match group");
        for (char c : text) {
            if (c != '0' && c != '1') throw std::invalid_argument("bad binary element literal");
            coords.push_back(c - '0');
        }
    } else {
        std::string tok;
        std::stringstream ss{std::string(text)};
        while (std::getline(ss, tok, ',')) coords.push_back(std::stoi(tok));
    }
    return index_of(coords);
}

std::string GroupSpec::to_string() const {
    std::string out;
    std::size_t j = 0;
    while (j < factors_.size()) {
        std::size_t k = j;
        while (k < factors_.size() && factors_[k] == factors_[j]) ++k;
        if (!out.empty()) out.push_back('x');
        out += "Z" + std::to_string(factors_[j]);
        if (k - j > 1) out += "^" + std::to_string(k - j);
        j = k;
    }
    return out;
}

std::vector<GroupElement> enumerate(const GroupSpec& group) {
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(group.order()));
    for (long long i = 0; i < group.order(); ++i) out.push_back(group.coords_of(i));
    return out;
}

PairingForm PairingForm::standard(const GroupSpec& group) {
    PairingForm f;
    int k = group.num_factors();
    f.modulus_ = group.exponent();
    f.m_.assign(k, std::vector<int>(k, 0));
    for (int j = 0; j < k; ++j) f.m_[j][j] = group.exponent() / group.factors()[j];
    f.standard_ = true;
    f.name_ = "standard";
    return f;
}

PairingForm PairingForm::symplectic(const GroupSpec& group) {
    if (!group.is_exponent_two())
        throw std::invalid_argument("symplectic pairing requires an exponent-2 group");
    int k = group.num_factors();
    if (k % 2 != 0)
        throw std::invalid_argument("symplectic pairing requires an even number of factors");
    std::vector<std::vector<int>> m(k, std::vector<int>(k, 0));
    for (int j = 0; j + 1 < k; j += 2) {
        m[j][j + 1] = 1;
        m[j + 1][j] = 1;
    }
    PairingForm f = from_matrix(group, std::move(m));
    f.name_ = "symplectic";
    return f;
}

PairingForm PairingForm::from_matrix(const GroupSpec& group, std::vector<std::vector<int>> m,
                                     std::string name) {
    int k = group.num_factors();
    int L = group.exponent();
    if (static_cast<int>(m.size()) != k)
        throw std::invalid_argument("pairing matrix size does not match group");
    for (int j = 0; j < k; ++j) {
        if (static_cast<int>(m[j].size()) != k)
            throw std::invalid_argument("pairing matrix is not square");
        for (int l = 0; l < k; ++l) {
            int v = ((m[j][l] % L) + L) % L;
            // Biadditivity: the exponent must vanish when either coordinate wraps.
            if ((static_cast<long long>(v) * group.factors()[j]) % L != 0 ||
                (static_cast<long long>(v) * group.factors()[l]) % L != 0)
                throw std::invalid_argument("pairing matrix is not biadditive for this group");
            m[j][l] = v;
        }
    }
    PairingForm f;
    f.m_ = std::move(m);
    f.modulus_ = L;
    f.standard_ = false;
    f.name_ = std::move(name);
    return f;
}

int PairingForm::exponent(const GroupSpec& group, long long x_index, long long y_index) const {
    return exponent_coords(group, group.coords_of(x_index), group.coords_of(y_index));
}

int PairingForm::exponent_coords(const GroupSpec& group, const GroupElement& x,
                                 const GroupElement& y) const {
    int L = group.exponent();
    long long acc = 0;
    int k = group.num_factors();
    for (int j = 0; j < k; ++j) {
        if (x[j] == 0) continue;
        for (int l = 0; l < k; ++l) {
            if (m_[j][l] == 0 || y[l] == 0) continue;
            acc += static_cast<long long>(x[j]) * m_[j][l] % L * y[l];
        }
    }
    return static_cast<int>(((acc % L) + L) % L);
}

PairingForm PairingForm::transposed() const {
    PairingForm f = *this;
    int k = static_cast<int>(m_.size());
    for (int j = 0; j < k; ++j)
        for (int l = j + 1; l < k; ++l) std::swap(f.m_[j][l], f.m_[l][j]);
    return f;
}

RootOfUnity character_value(const GroupSpec& group, const DualElement& y, const GroupElement& x) {
    if (y.size() != static_cast<std::size_t>(group.num_factors()) || x.size() != y.size())
        throw std::invalid_argument("element dimension mismatch");
    PairingForm std_form = PairingForm::standard(group);
    return RootOfUnity(std_form.exponent_coords(group, x, y), group.exponent());
}

ExactMatrix character_table(const GroupSpec& group, const std::optional<PairingForm>& bicharacter) {
    PairingForm form = bicharacter.value_or(PairingForm::standard(group));
    long long n = group.order();
    std::vector<GroupElement> elems = enumerate(group);
    int L = group.exponent();

    if (bicharacter.has_value()) {
        std::set<std::vector<int>> distinct_rows;
        for (long long x = 0; x < n; ++x) {
            std::vector<int> row(static_cast<std::size_t>(n));
            for (long long y = 0; y < n; ++y)
                row[static_cast<std::size_t>(y)] =
                    form.exponent_coords(group, elems[static_cast<std::size_t>(x)],
                                         elems[static_cast<std::size_t>(y)]);
            distinct_rows.insert(std::move(row));
        }
        if (static_cast<long long>(distinct_rows.size()) != n)
            throw std::invalid_argument("degenerate bicharacter: row map is not injective");
    }

    if (L <= 2) {
        ExactMatrix gamma = ExactMatrix::integer(static_cast<std::size_t>(n),
                                                 static_cast<std::size_t>(n));
        for (long long x = 0; x < n; ++x)
            for (long long y = 0; y < n; ++y) {
                int e = form.exponent_coords(group, elems[static_cast<std::size_t>(x)],
                                             elems[static_cast<std::size_t>(y)]);
                gamma.at_int(static_cast<std::size_t>(x), static_cast<std::size_t>(y)) =
                    e == 0 ? 1 : -1;
            }
        return gamma;
    }
    ExactMatrix gamma = ExactMatrix::complex(static_cast<std::size_t>(n),
                                             static_cast<std::size_t>(n));
    for (long long x = 0; x < n; ++x)
        for (long long y = 0; y < n; ++y) {
            int e = form.exponent_coords(group, elems[static_cast<std::size_t>(x)],
                                         elems[static_cast<std::size_t>(y)]);
            gamma.at_complex(static_cast<std::size_t>(x), static_cast<std::size_t>(y)) =
                RootOfUnity(e, L).value();
        }
    return gamma;
}

std::vector<std::complex<double>> dft(const GroupSpec& group,
                                      const std::vector<std::complex<double>>& x) {
    long long n = group.order();
    if (static_cast<long long>(x.size()) != n) throw std::invalid_argument("vector length mismatch");
    PairingForm form = PairingForm::standard(group);
    std::vector<GroupElement> elems = enumerate(group);
    int L = group.exponent();
    std::vector<std::complex<double>> out(static_cast<std::size_t>(n));
    for (long long y = 0; y < n; ++y) {
        std::complex<double> acc = 0;
        for (long long g = 0; g < n; ++g) {
            int e = form.exponent_coords(group, elems[static_cast<std::size_t>(g)],
                                         elems[static_cast<std::size_t>(y)]);
            acc += std::conj(RootOfUnity(e, L).value()) * x[static_cast<std::size_t>(g)];
        }
        out[static_cast<std::size_t>(y)] = acc;
    }
    return out;
}

std::vector<std::int64_t> dft_exact(const GroupSpec& group, const std::vector<std::int64_t>& x) {
    if (!group.is_exponent_two())
        throw std::invalid_argument("exact DFT requires an exponent-2 group");
    long long n = group.order();
    if (static_cast<long long>(x.size()) != n) throw std::invalid_argument("vector length mismatch");
    PairingForm form = PairingForm::standard(group);
    std::vector<GroupElement> elems = enumerate(group);
    std::vector<std::int64_t> out(static_cast<std::size_t>(n), 0);
    for (long long y = 0; y < n; ++y) {
        std::int64_t acc = 0;
        for (long long g = 0; g < n; ++g) {
            int e = form.exponent_coords(group, elems[static_cast<std::size_t>(g)],
                                         elems[static_cast<std::size_t>(y)]);
            acc = checked_add(acc, e == 0 ? x[static_cast<std::size_t>(g)]
                                          : -x[static_cast<std::size_t>(g)]);
        }
        out[static_cast<std::size_t>(y)] = acc;
    }
    return out;
}

namespace {

template <typename T>
std::vector<T> convolve_impl(const GroupSpec& group, const std::vector<T>& x1,
                             const std::vector<T>& x2) {
    long long n = group.order();
    if (static_cast<long long>(x1.size()) != n || static_cast<long long>(x2.size()) != n)
        throw std::invalid_argument("vector length mismatch");
    std::vector<T> out(static_cast<std::size_t>(n), T(0));
    for (long long g = 0; g < n; ++g) {
        T acc(0);
        for (long long gp = 0; gp < n; ++gp) {
            long long diff = group.add(g, group.negate(gp));
            acc += x1[static_cast<std::size_t>(gp)] * x2[static_cast<std::size_t>(diff)];
        }
        out[static_cast<std::size_t>(g)] = acc;
    }
    return out;
}

}  // namespace

std::vector<std::complex<double>> convolve(const GroupSpec& group,
                                           const std::vector<std::complex<double>>& x1,
                                           const std::vector<std::complex<double>>& x2) {
    return convolve_impl(group, x1, x2);
}

std::vector<std::int64_t> convolve_exact(const GroupSpec& group, const std::vector<std::int64_t>& x1,
                                         const std::vector<std::int64_t>& x2) {
    return convolve_impl(group, x1, x2);
}

std::vector<std::complex<double>> involute(const GroupSpec& group,
                                           const std::vector<std::complex<double>>& x) {
    long long n = group.order();
    if (static_cast<long long>(x.size()) != n) throw std::invalid_argument("vector length mismatch");
    std::vector<std::complex<double>> out(static_cast<std::size_t>(n));
    for (long long g = 0; g < n; ++g)
        out[static_cast<std::size_t>(g)] = std::conj(x[static_cast<std::size_t>(group.negate(g))]);
    return out;
}

std::vector<std::int64_t> involute_exact(const GroupSpec& group,
                                         const std::vector<std::int64_t>& x) {
    long long n = group.order();
    if (static_cast<long long>(x.size()) != n) throw std::invalid_argument("vector length mismatch");
    std::vector<std::int64_t> out(static_cast<std::size_t>(n));
    for (long long g = 0; g < n; ++g)
        out[static_cast<std::size_t>(g)] = x[static_cast<std::size_t>(group.negate(g))];
    return out;
}

}  // namespace ectff
