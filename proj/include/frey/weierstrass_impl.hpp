#pragma once

// Ring-generic c4 and discriminant. `Ring` provides add, sub, mul and
// scale(x, int64).

namespace frey {

template <class Ring, class T>
void weierstrass_invariants(const Ring& r, const std::array<T, 5>& a, T& c4, T& disc) {
    const T& a1 = a[0];
    const T& a2 = a[1];
    const T& a3 = a[2];
    const T& a4 = a[3];
    const T& a6 = a[4];
    const T b2 = r.add(r.mul(a1, a1), r.scale(a2, 4));
    const T b4 = r.add(r.scale(a4, 2), r.mul(a1, a3));
    const T b6 = r.add(r.mul(a3, a3), r.scale(a6, 4));
    // b8 = a1^2 a6 + 4 a2 a6 - a1 a3 a4 + a2 a3^2 - a4^2
    T b8 = r.mul(r.mul(a1, a1), a6);
    b8 = r.add(b8, r.scale(r.mul(a2, a6), 4));
    b8 = r.sub(b8, r.mul(r.mul(a1, a3), a4));
    b8 = r.add(b8, r.mul(a2, r.mul(a3, a3)));
    b8 = r.sub(b8, r.mul(a4, a4));
    c4 = r.sub(r.mul(b2, b2), r.scale(b4, 24));
    // disc = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
    T d = r.scale(r.mul(r.mul(b2, b2), b8), -1);
    d = r.sub(d, r.scale(r.mul(r.mul(b4, b4), b4), 8));
    d = r.sub(d, r.scale(r.mul(b6, b6), 27));
    d = r.add(d, r.scale(r.mul(r.mul(b2, b4), b6), 9));
    disc = d;
}

} // namespace frey
