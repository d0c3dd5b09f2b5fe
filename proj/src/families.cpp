#include "tss/families.hpp"

#include "tss/errors.hpp"

namespace tss {
namespace families {

std::pair<Int, Int> consecutive_triple_xy(const Int& p, const Int& q, const Int& r) {
    // closed form of the (h,k,f,g,t) = (1,-1,2p,2q,2r) solution
    Int x = 4 * r * (16 * p * p * r * r + 8 * p * r + 4 * r * r + 1) * q * q -
            8 * r * (4 * p * p * r * r - 4 * p * p * r + 2 * p * r + r * r - p - r) * q -
            2 * r * (4 * p * p * r - 2 * p * p + 2 * p + r - 1);
    Int y = -2 * (4 * p * r + 1) * (16 * p * p * r * r + 8 * p * r + 4 * r * r + 1) * q * q +
            4 * (4 * p * r + 1) * (4 * p * p * r * r - 4 * p * p * r + 2 * p * r + r * r - p - r) *
                q +
            16 * p * p * p * r * r - 8 * p * p * p * r + 8 * p * p * r + 4 * p * r * r -
            2 * p * p - 4 * p * r - 1;
    return {x, y};
}

SequenceCertificate consecutive_triple(const Int& p, const Int& q, const Int& r) {
    auto [x, y] = consecutive_triple_xy(p, q, r);
    // the (1,-1) shifts from the determinant-1 parametrization at (2p,2q,2r)
    const Int u1 = 4 * p * r + 1, u2 = 2 * r;
    const Int v1 = 8 * p * q * r + 2 * p + 2 * q, v2 = 4 * q * r + 1;

    SequenceCertificate cert;
    cert.method = "consecutive";
    cert.parameters = {{"p", p}, {"q", q}, {"r", r}, {"x", x}, {"y", y}};
    cert.n = x * x + y * y;
    add_term(cert, -1, make_rep(x + v1, y + v2));
    add_term(cert, 0, make_rep(x, y));
    add_term(cert, 1, make_rep(x + u1, y + u2));
    return cert;
}

SequenceCertificate triple_nonzero_17m5(const Int& m) {
    const Int p = 17 * m + 5;
    SequenceCertificate cert = consecutive_triple(p, 0, 0);
    // middle term is (2p^2+1)^2 = (17 s)^2 with s = 34 m^2 + 20 m + 3
    const Int s = 34 * m * m + 20 * m + 3;
    cert.terms[1].rep = make_rep(8 * s, 15 * s);
    cert.terms[1].nonzero = true;
    cert.parameters.emplace(cert.parameters.begin(), "m", m);
    cert.parameters.emplace_back("s", s);
    return cert;
}

QuadParams solve_x2_plus_2(const Int& m, const Int& r) {
    QuadParams out;
    out.m = m;
    out.r = r;
    out.t = 2 * (m - r + 1) * (m - r - 1);
    out.x = (4 * m * m - 4 * m + 2) * r * r - (8 * m * m * m - 8 * m * m + 2) * r +
            4 * m * (m + 1) * (m - 1) * (m - 1);
    out.u = 4 * m * (m - 1) * r * r - (8 * m * m * m - 8 * m * m - 4 * m + 2) * r +
            4 * m * m * m * m - 4 * m * m * m - 6 * m * m + 4 * m + 1;
    out.v = (4 * m - 2) * r * r - (8 * m * m - 4 * m - 2) * r + 4 * m * m * m - 2 * m * m -
            4 * m + 1;
    return out;
}

SequenceCertificate quad_n124(const Int& m, const Int& r) {
    QuadParams qp = solve_x2_plus_2(m, r);
    const Int x = abs(qp.x);

    SequenceCertificate cert;
    cert.method = "quad";
    cert.parameters = {{"m", m}, {"r", r}, {"t", qp.t}, {"x", qp.x}, {"u", qp.u}, {"v", qp.v}};
    cert.n = x * x;
    if (x % 5 == 0) {
        add_term(cert, 0, upgrade_square_rep(x, 1, 2));  // 5 = 1^2 + 2^2
    } else {
        add_term(cert, 0, make_rep(0, x));
    }
    add_term(cert, 1, make_rep(1, x));
    add_term(cert, 2, make_rep(qp.u, qp.v));
    add_term(cert, 4, make_rep(2, x));
    return cert;
}

TwoSquareRep upgrade_square_rep(const Int& w, const Int& r1, const Int& r2) {
    const Int d = r1 * r1 + r2 * r2;
    if (d == 0 || w % d != 0)
        throw Error("upgrade_square_rep: r1^2 + r2^2 must divide the square root");
    const Int z = abs(w) / d;
    return make_rep((r1 * r1 - r2 * r2) * z, 2 * r1 * r2 * z);
}

}  // namespace families
}  // namespace tss
