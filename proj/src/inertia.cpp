#include <gmpxx.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "ngspec/spectrum.hpp"

namespace ngspec {

namespace {

struct RationalOverflow {};

// Reduced fraction with 64-bit parts; every operation checks that the reduced
// result still fits and throws RationalOverflow otherwise.
class Rational64 {
public:
    Rational64() = default;
    Rational64(long long v) : num_(v) {}

    int sign() const { return (num_ > 0) - (num_ < 0); }

    friend Rational64 operator-(const Rational64& a, const Rational64& b) {
        return make(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                    static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational64 operator+(const Rational64& a, const Rational64& b) {
        return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                    static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational64 operator*(const Rational64& a, const Rational64& b) {
        return make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational64 operator/(const Rational64& a, const Rational64& b) {
        return make(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    }

private:
    static __int128 gcd(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            const auto t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational64 make(__int128 num, __int128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (num == 0) return Rational64{};
        const auto g = gcd(num, den);
        num /= g;
        den /= g;
        constexpr __int128 lim = std::numeric_limits<long long>::max();
        if (num > lim || num < -lim || den > lim) throw RationalOverflow{};
        Rational64 r;
        r.num_ = static_cast<long long>(num);
        r.den_ = static_cast<long long>(den);
        return r;
    }

    long long num_ = 0;
    long long den_ = 1;
};

int sign_of(const Rational64& q) { return q.sign(); }
int sign_of(const mpq_class& q) { return sgn(q); }

// Symmetric Gaussian elimination by congruence. A nonzero diagonal entry is
// eliminated as a 1x1 pivot; when the whole remaining diagonal is zero, a
// nonzero off-diagonal a_kl gives the 2x2 pivot [[0,a],[a,0]], which carries
// one positive and one negative eigenvalue.
template <class Q>
Inertia congruence_inertia(const Graph& g) {
    const int n = g.order();
    std::vector<Q> a(static_cast<std::size_t>(n) * n);
    auto at = [&](int i, int j) -> Q& { return a[static_cast<std::size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) at(i, j) = Q(g.has_edge(i, j) ? 1 : 0);

    std::vector<int> live(n);
    std::iota(live.begin(), live.end(), 0);
    Inertia in;

    auto erase = [&](int v) { live.erase(std::find(live.begin(), live.end(), v)); };

    while (!live.empty()) {
        int diag = -1;
        for (int v : live)
            if (sign_of(at(v, v)) != 0) {
                diag = v;
                break;
            }
        if (diag >= 0) {
            const Q d = at(diag, diag);
            (sign_of(d) > 0 ? in.positive : in.negative)++;
            erase(diag);
            for (int i : live) {
                if (sign_of(at(i, diag)) == 0) continue;
                const Q f = at(i, diag) / d;
                for (int j : live)
                    if (sign_of(at(diag, j)) != 0) at(i, j) = at(i, j) - f * at(diag, j);
            }
            continue;
        }

        int k = -1, l = -1;
        for (std::size_t x = 0; x < live.size() && k < 0; ++x)
            for (std::size_t y = x + 1; y < live.size(); ++y)
                if (sign_of(at(live[x], live[y])) != 0) {
                    k = live[x];
                    l = live[y];
                    break;
                }
        if (k < 0) {
            in.zero += static_cast<int>(live.size());
            break;
        }
        const Q p = at(k, l);
        ++in.positive;
        ++in.negative;
        erase(k);
        erase(l);
        for (int i : live) {
            const Q ik = at(i, k), il = at(i, l);
            if (sign_of(ik) == 0 && sign_of(il) == 0) continue;
            for (int j : live) {
                const Q jk = at(j, k), jl = at(j, l);
                if (sign_of(jk) == 0 && sign_of(jl) == 0) continue;
                at(i, j) = at(i, j) - (ik * jl + il * jk) / p;
            }
        }
    }
    return in;
}

} // namespace

Inertia exact_inertia(const Graph& g) {
    try {
        return congruence_inertia<Rational64>(g);
    } catch (const RationalOverflow&) {
        return congruence_inertia<mpq_class>(g);
    }
}

namespace detail {
// Exposed for tests that want to exercise the arbitrary precision path directly.
Inertia exact_inertia_gmp(const Graph& g) { return congruence_inertia<mpq_class>(g); }
} // namespace detail

} // namespace ngspec
