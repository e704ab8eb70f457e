#include "arrlab/cyclo.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace arrlab {

namespace {

constexpr int kMaxOrder = 10000;

void require_order(int n) {
    if (n < 1) throw UsageError("cyclotomic order must be >= 1, got " + std::to_string(n));
    if (n > kMaxOrder)
        throw UsageError("cyclotomic order " + std::to_string(n) + " exceeds the cap of 10000");
}

// Exact division of integer polynomials; remainder must vanish.
std::vector<BigInt> divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    std::vector<BigInt> quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
    for (int i = static_cast<int>(num.size()) - 1; i >= static_cast<int>(den.size()) - 1; --i) {
        if (num[i] == 0) continue;
        const BigInt& lead = den.back(); // monic in all our uses, but divide anyway
        BigInt q = num[i] / lead;
        int shift = i - (static_cast<int>(den.size()) - 1);
        quot[shift] = q;
        for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= q * den[j];
    }
    for (const BigInt& c : num)
        if (c != 0) throw Error("internal: non-exact polynomial division");
    if (quot.empty()) quot.push_back(0);
    return quot;
}

std::vector<BigInt> multiply(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Rational-coefficient polynomial helpers used for reduction and inversion.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

QPoly qsub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// Remainder of a modulo b (b non-zero), over Q.
QPoly qmod(QPoly a, const QPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= q * b[j];
        trim(a);
    }
    return a;
}

} // namespace

int euler_phi(int n) {
    require_order(n);
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        result -= result / p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<BigInt>& cyclotomic_polynomial(int n) {
    require_order(n);
    static std::map<int, std::vector<BigInt>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::function<const std::vector<BigInt>&(int)> get = [&](int k) -> const std::vector<BigInt>& {
        auto found = cache.find(k);
        if (found != cache.end()) return found->second;
        std::vector<BigInt> value;
        if (k == 1) {
            value = {-1, 1}; // x - 1
        } else {
            std::vector<BigInt> num(k + 1);
            num[0] = -1;
            num[k] = 1; // x^k - 1
            std::vector<BigInt> den = {1};
            for (int d = 1; d < k; ++d)
                if (k % d == 0) den = multiply(den, get(d));
            value = divide_exact(std::move(num), den);
        }
        return cache.emplace(k, std::move(value)).first->second;
    };
    return get(n);
}

Rational parse_rational(const std::string& text) {
    auto bad = [&] { return ParseError("malformed rational '" + text + "'"); };
    if (text.empty()) throw bad();
    auto slash = text.find('/');
    auto check_int = [&](const std::string& s) {
        if (s.empty()) throw bad();
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) throw bad();
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
    };
    try {
        if (slash == std::string::npos) {
            check_int(text);
            return Rational(BigInt(text));
        }
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        check_int(num);
        check_int(den);
        BigInt p(num), q(den);
        if (q == 0) throw ParseError("zero denominator in '" + text + "'");
        if (q < 0) {
            p = -p;
            q = -q;
        }
        return Rational(p, q);
    } catch (const std::exception& e) {
        if (dynamic_cast<const ParseError*>(&e)) throw;
        throw bad();
    }
}

std::string rational_string(const Rational& r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

CycRat::CycRat(Rational value, int order) {
    require_order(order);
    order_ = order;
    coeffs_.assign(euler_phi(order), Rational(0));
    coeffs_[0] = std::move(value);
}

CycRat CycRat::from_polynomial(int order, std::vector<Rational> coeffs) {
    require_order(order);
    const std::vector<BigInt>& phi = cyclotomic_polynomial(order);
    QPoly modulus(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) modulus[i] = Rational(phi[i]);
    QPoly reduced = qmod(std::move(coeffs), modulus);
    CycRat result;
    result.order_ = order;
    result.coeffs_.assign(euler_phi(order), Rational(0));
    for (std::size_t i = 0; i < reduced.size(); ++i) result.coeffs_[i] = std::move(reduced[i]);
    return result;
}

bool CycRat::is_zero() const {
    for (const Rational& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycRat::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

void CycRat::require_same_order(const CycRat& a, const CycRat& b) {
    if (a.order_ != b.order_)
        throw UsageError("cyclotomic order mismatch: " + std::to_string(a.order_) + " vs " +
                         std::to_string(b.order_));
}

CycRat operator+(const CycRat& a, const CycRat& b) {
    CycRat::require_same_order(a, b);
    CycRat out = a;
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
    return out;
}

CycRat operator-(const CycRat& a, const CycRat& b) {
    CycRat::require_same_order(a, b);
    CycRat out = a;
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] -= b.coeffs_[i];
    return out;
}

CycRat CycRat::operator-() const {
    CycRat out = *this;
    for (Rational& c : out.coeffs_) c = -c;
    return out;
}

CycRat operator*(const CycRat& a, const CycRat& b) {
    CycRat::require_same_order(a, b);
    if (a.coeffs_.size() == 1) { // order 1 and 2 stay plain rationals
        CycRat out = a;
        out.coeffs_[0] *= b.coeffs_[0];
        return out;
    }
    QPoly prod(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return CycRat::from_polynomial(a.order_, std::move(prod));
}

CycRat CycRat::inverse() const {
    if (is_zero()) throw UsageError("division by zero in Q(zeta_" + std::to_string(order_) + ")");
    if (coeffs_.size() == 1) {
        CycRat out = *this;
        out.coeffs_[0] = Rational(1) / coeffs_[0];
        return out;
    }
    // Extended Euclid of the coefficient polynomial against Phi_n over Q.
    const std::vector<BigInt>& phi = cyclotomic_polynomial(order_);
    QPoly r0(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) r0[i] = Rational(phi[i]);
    QPoly r1(coeffs_);
    trim(r1);
    QPoly s0 = {};          // coefficient of *this in r0
    QPoly s1 = {Rational(1)};
    while (true) {
        // r1 divides into r0: r0 = q*r1 + r2
        QPoly q;
        QPoly rem = r0;
        trim(rem);
        q.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, Rational(0));
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rational c = rem.back() / r1.back();
            std::size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (std::size_t j = 0; j < r1.size(); ++j) rem[shift + j] -= c * r1[j];
            trim(rem);
        }
        QPoly s2 = qsub(std::move(s0), qmul(q, s1));
        if (rem.empty()) {
            // r1 is the gcd; Phi_n irreducible and *this != 0 force it constant.
            if (r1.size() != 1)
                throw Error("internal: non-trivial gcd with an irreducible cyclotomic polynomial");
            QPoly inv = s1;
            for (Rational& c : inv) c /= r1[0];
            return CycRat::from_polynomial(order_, std::move(inv));
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
}

CycRat operator/(const CycRat& a, const CycRat& b) { return a * b.inverse(); }

bool operator==(const CycRat& a, const CycRat& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

bool operator<(const CycRat& a, const CycRat& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
    }
    return false;
}

std::string CycRat::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) out << " + ";
        if (i == 0) {
            out << coeffs_[i];
        } else {
            out << "(" << coeffs_[i] << ")*z^" << i;
        }
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

CycRat zeta_power(int n, long long k) {
    require_order(n);
    long long e = k % n;
    if (e < 0) e += n;
    std::vector<Rational> poly(static_cast<std::size_t>(e) + 1, Rational(0));
    poly[static_cast<std::size_t>(e)] = 1;
    return CycRat::from_polynomial(n, std::move(poly));
}

} // namespace arrlab
