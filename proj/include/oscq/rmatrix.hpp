#pragma once

#include <string>
#include <utility>
#include <vector>

#include "oscq/linalg.hpp"
#include "oscq/pbw.hpp"

namespace oscq {

// R = exp{-wA+ (x) N} exp{wN (x) A+} and its inverse (built as the
// reversed-sign exponential product and then verified by multiplication).
struct UniversalR {
    pbw::T2El value;
    pbw::T2El inverse;
    bool inverse_verified = false;
};

UniversalR build_R(const pbw::Context& ctx);

// Factor-swapped control exp{wN (x) A+} exp{-wA+ (x) N}.
pbw::T2El swapped_factor_variant(const pbw::Context& ctx);

// R12 R13 R23 - R23 R13 R12 in the threefold tensor algebra.
pbw::T3El qybe_residual(const pbw::Context& ctx, const pbw::T2El& r);

// sigma(Delta(X)) R - R Delta(X) per generator.
std::vector<std::pair<std::string, pbw::T2El>> intertwine_residual(const pbw::Context& ctx,
                                                                   const pbw::T2El& r);

// ---------------------------------------------------------------------------
// 3x3 matrix representation of the oscillator algebra, which also realizes
// the deformed relations because D(A+)^2 = 0.

struct MatrixRep {
    MatR n, ap, am, m;

    static MatrixRep oscillator();

    const MatR& of_gen(int g) const;  // pbw::Gen index
    // D-image of a PBW monomial (product in the PBW order M, A-, A+, N).
    MatR image(const pbw::Mono& mono) const;
};

// D (x) D applied to a tensor element; series coefficients become exact
// polynomials in z. 9x9.
MatP rep_tensor_image(const MatrixRep& rep, const pbw::T2El& x);

// Closed form I (x) I + z (D(N) (x) D(A+) - D(A+) (x) D(N)).
MatP rep_r_closed_form(const MatrixRep& rep);

// Generic classical group element with commuting coordinates m, am, ap, en:
//   [[1, am*en, m + am*ap], [0, en, ap], [0, 0, 1]].
MatP classical_group_element();

struct RepCheckReport {
    bool classical_relations = false;   // exact [D,D] table
    bool aplus_square_zero = false;
    bool deformed_relations = false;    // exact, z symbolic
    bool r_image_matches_closed_form = false;
    bool matrix_qybe_zero = false;      // 27x27, z symbolic
};
RepCheckReport rep_checks(const UniversalR& r);

// Embeddings of a 9x9 two-slot matrix into three slots (27x27).
MatP embed12(const MatP& r9);
MatP embed23(const MatP& r9);
MatP embed13(const MatP& r9);

}  // namespace oscq
