#include "frey/cyclotomic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace frey {

namespace {

using Wide = std::array<mpz_class, kConductor>;

// Folds a vector in Z[x]/(x^13 - 1) onto the power basis using
// zeta^12 = -(1 + zeta + ... + zeta^11).
CyclotomicInt fold(const Wide& w) {
    CyclotomicInt::Coords c;
    for (unsigned i = 0; i < kDegree; ++i) c[i] = w[i] - w[kDegree];
    return CyclotomicInt(c);
}

bool is_unit_mod13(unsigned j) { return j % kConductor != 0; }

} // namespace

CyclotomicInt CyclotomicInt::zeta() { return zeta_power(1); }

CyclotomicInt CyclotomicInt::zeta_power(long k) {
    long r = k % static_cast<long>(kConductor);
    if (r < 0) r += kConductor;
    Wide w;
    w[static_cast<std::size_t>(r)] = 1;
    return fold(w);
}

CyclotomicInt CyclotomicInt::from_power_coeffs(const std::vector<mpz_class>& coeffs) {
    Wide w;
    for (std::size_t i = 0; i < coeffs.size(); ++i) w[i % kConductor] += coeffs[i];
    return fold(w);
}

bool CyclotomicInt::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const mpz_class& c) { return c == 0; });
}

bool CyclotomicInt::is_rational() const {
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const mpz_class& c) { return c == 0; });
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
    for (unsigned i = 0; i < kDegree; ++i) coords_[i] += o.coords_[i];
    return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) {
    for (unsigned i = 0; i < kDegree; ++i) coords_[i] -= o.coords_[i];
    return *this;
}

CyclotomicInt& CyclotomicInt::operator*=(const CyclotomicInt& o) {
    Wide w;
    for (unsigned i = 0; i < kDegree; ++i) {
        if (coords_[i] == 0) continue;
        for (unsigned j = 0; j < kDegree; ++j) {
            if (o.coords_[j] == 0) continue;
            w[(i + j) % kConductor] += coords_[i] * o.coords_[j];
        }
    }
    *this = fold(w);
    return *this;
}

CyclotomicInt CyclotomicInt::operator-() const {
    CyclotomicInt r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

CyclotomicInt CyclotomicInt::pow(unsigned e) const {
    CyclotomicInt result(1L);
    CyclotomicInt base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

CyclotomicInt CyclotomicInt::galois(unsigned j) const {
    if (!is_unit_mod13(j)) throw std::invalid_argument("galois: j must be prime to 13");
    Wide w;
    for (unsigned i = 0; i < kDegree; ++i) w[(i * j) % kConductor] += coords_[i];
    return fold(w);
}

mpz_class CyclotomicInt::norm() const {
    CyclotomicInt prod = *this;
    for (unsigned j = 2; j < kConductor; ++j) prod *= galois(j);
    if (!prod.is_rational()) throw std::logic_error("norm: product of conjugates is not rational");
    return prod.coords_[0];
}

CyclotomicInt CyclotomicInt::exact_div(const CyclotomicInt& d) const {
    if (d.is_zero()) throw std::domain_error("exact_div: division by zero");
    CyclotomicInt conj(1L);
    for (unsigned j = 2; j < kConductor; ++j) conj *= d.galois(j);
    const CyclotomicInt n = d * conj;
    if (!n.is_rational()) throw std::logic_error("exact_div: norm is not rational");
    CyclotomicInt q = *this * conj;
    for (auto& c : q.coords_) {
        if (!mpz_divisible_p(c.get_mpz_t(), n.coords_[0].get_mpz_t())) {
            throw std::domain_error("exact_div: divisor does not divide");
        }
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), n.coords_[0].get_mpz_t());
    }
    return q;
}

std::string CyclotomicInt::to_string() const {
    std::string out;
    for (unsigned i = 0; i < kDegree; ++i) {
        if (i) out += ',';
        out += coords_[i].get_str();
    }
    return out;
}

CyclotomicInt CyclotomicInt::parse(std::string_view text) {
    std::string cleaned;
    for (char ch : text) {
        if (ch == '[' || ch == ']') continue;
        cleaned += (ch == ',') ? ' ' : ch;
    }
    std::istringstream in(cleaned);
    Coords c;
    std::string tok;
    unsigned n = 0;
    while (in >> tok) {
        if (n == kDegree) throw std::invalid_argument("CyclotomicInt::parse: more than 12 coordinates");
        if (c[n].set_str(tok, 10) != 0) {
            throw std::invalid_argument("CyclotomicInt::parse: bad integer '" + tok + "'");
        }
        ++n;
    }
    if (n != kDegree) throw std::invalid_argument("CyclotomicInt::parse: expected 12 coordinates");
    return CyclotomicInt(c);
}

std::string_view subfield_name(Subfield s) {
    switch (s) {
    case Subfield::full: return "full";
    case Subfield::quadratic: return "quadratic";
    case Subfield::cubic: return "cubic";
    }
    return "?";
}

Subfield parse_subfield(std::string_view name) {
    if (name == "full") return Subfield::full;
    if (name == "quadratic") return Subfield::quadratic;
    if (name == "cubic") return Subfield::cubic;
    throw std::invalid_argument("unknown subfield tag '" + std::string(name) + "'");
}

unsigned subfield_degree(Subfield s) {
    switch (s) {
    case Subfield::full: return 12;
    case Subfield::quadratic: return 2;
    case Subfield::cubic: return 3;
    }
    return 0;
}

std::vector<unsigned> subfield_fixing_group(Subfield s) {
    switch (s) {
    case Subfield::full: return {1};
    case Subfield::quadratic: return {1, 3, 4, 9, 10, 12};
    case Subfield::cubic: return {1, 5, 8, 12};
    }
    return {};
}

std::vector<unsigned> subfield_coset_representatives(Subfield s) {
    const auto group = subfield_fixing_group(s);
    std::vector<unsigned> reps;
    std::vector<bool> seen(kConductor, false);
    for (unsigned j = 1; j < kConductor; ++j) {
        if (seen[j]) continue;
        reps.push_back(j);
        for (unsigned h : group) seen[(j * h) % kConductor] = true;
    }
    return reps;
}

bool lies_in(const CyclotomicInt& x, Subfield s) {
    for (unsigned j : subfield_fixing_group(s)) {
        if (j != 1 && !(x.galois(j) == x)) return false;
    }
    return true;
}

CyclotomicInt sqrt13() {
    const auto squares = subfield_fixing_group(Subfield::quadratic);
    CyclotomicInt g;
    for (unsigned j = 1; j < kConductor; ++j) {
        const bool square = std::find(squares.begin(), squares.end(), j) != squares.end();
        g += square ? CyclotomicInt::zeta_power(j) : -CyclotomicInt::zeta_power(j);
    }
    return g;
}

CyclotomicInt subfield_generator(Subfield s) {
    switch (s) {
    case Subfield::full: return CyclotomicInt::zeta();
    case Subfield::quadratic: {
        // (1 + g)/2 = -(sum of zeta^j over non-residues j)
        CyclotomicInt theta = CyclotomicInt(1L) + sqrt13();
        CyclotomicInt::Coords c = theta.coords();
        for (auto& v : c) v /= 2;
        return CyclotomicInt(c);
    }
    case Subfield::cubic: {
        CyclotomicInt eta;
        for (unsigned j : subfield_fixing_group(Subfield::cubic)) eta += CyclotomicInt::zeta_power(j);
        return eta;
    }
    }
    return {};
}

std::vector<mpz_class> subfield_minimal_polynomial(Subfield s) {
    if (s == Subfield::full) return std::vector<mpz_class>(kConductor, mpz_class(1));
    const CyclotomicInt theta = subfield_generator(s);
    std::vector<CyclotomicInt> poly{CyclotomicInt(1L)};
    for (unsigned j : subfield_coset_representatives(s)) {
        const CyclotomicInt root = theta.galois(j);
        std::vector<CyclotomicInt> next(poly.size() + 1);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * root;
        }
        poly = std::move(next);
    }
    std::vector<mpz_class> out;
    for (const auto& c : poly) {
        if (!c.is_rational()) throw std::logic_error("minimal polynomial has irrational coefficient");
        out.push_back(c[0]);
    }
    return out;
}

std::vector<mpz_class> subfield_coordinates(const CyclotomicInt& x, Subfield s) {
    if (s == Subfield::full) return {x.coords().begin(), x.coords().end()};
    const unsigned d = subfield_degree(s);
    const CyclotomicInt theta = subfield_generator(s);
    std::vector<CyclotomicInt> basis{CyclotomicInt(1L)};
    for (unsigned k = 1; k < d; ++k) basis.push_back(basis.back() * theta);

    // Row-reduce the 12 x (d+1) system [basis | x] over Q.
    std::vector<std::vector<mpq_class>> m(kDegree, std::vector<mpq_class>(d + 1));
    for (unsigned r = 0; r < kDegree; ++r) {
        for (unsigned c = 0; c < d; ++c) m[r][c] = basis[c][r];
        m[r][d] = x[r];
    }
    unsigned row = 0;
    std::vector<unsigned> pivot_rows(d);
    for (unsigned c = 0; c < d; ++c) {
        unsigned p = row;
        while (p < kDegree && m[p][c] == 0) ++p;
        if (p == kDegree) throw std::logic_error("subfield basis is degenerate");
        std::swap(m[p], m[row]);
        for (unsigned r = 0; r < kDegree; ++r) {
            if (r == row || m[r][c] == 0) continue;
            const mpq_class factor = m[r][c] / m[row][c];
            for (unsigned k = c; k <= d; ++k) m[r][k] -= factor * m[row][k];
        }
        pivot_rows[c] = row++;
    }
    for (unsigned r = row; r < kDegree; ++r) {
        if (m[r][d] != 0) throw std::domain_error("element does not lie in the subfield");
    }
    std::vector<mpz_class> out(d);
    for (unsigned c = 0; c < d; ++c) {
        mpq_class v = m[pivot_rows[c]][d] / m[pivot_rows[c]][c];
        v.canonicalize();
        if (v.get_den() != 1) throw std::domain_error("element is not integral over the subfield basis");
        out[c] = v.get_num();
    }
    return out;
}

} // namespace frey
