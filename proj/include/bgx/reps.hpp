#pragma once

#include "bgx/laurent.hpp"
#include "bgx/linalg.hpp"
#include "bgx/matrix.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bgx {

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LabelMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Generator label: eps(i,j), eps(i,j,k), or alpha(i).
struct GenLabel {
    enum class Kind { Eps = 0, EpsTriple = 1, Alpha = 2 };
    Kind kind = Kind::Eps;
    int i = 0, j = 0, k = 0;

    static GenLabel eps(int i, int j) { return {Kind::Eps, i, j, 0}; }
    static GenLabel eps(int i, int j, int k) { return {Kind::EpsTriple, i, j, k}; }
    static GenLabel alpha(int i) { return {Kind::Alpha, i, 0, 0}; }

    std::string str() const;
    static GenLabel parse(const std::string& text);

    friend auto operator<=>(const GenLabel&, const GenLabel&) = default;
};

enum class Family { IA, GassnerExt, BurauExt, PhiG, PhiB, Tensor };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

using LMatrix = Matrix<LaurentPoly>;

// A representation given by generator images over a Laurent polynomial ring.
// Images are kept sorted by label for deterministic iteration and output.
struct Representation {
    Family family = Family::IA;
    int n = 0;        // number of strands / free-group rank
    int degree = 0;   // matrix size
    Context context;  // variable names of the coefficient ring
    std::vector<std::pair<GenLabel, LMatrix>> images;

    const LMatrix& image(const GenLabel& label) const;
    bool has(const GenLabel& label) const;
    void sort_images();
};

// The same data after specializing all variables to nonzero rationals.
struct SpecializedRep {
    Family family = Family::IA;
    int n = 0;
    int degree = 0;
    Specialization spec;
    std::vector<std::pair<GenLabel, RMatrix>> images;

    const RMatrix& image(const GenLabel& label) const;
    std::vector<RMatrix> image_list() const;
};

// McCool generators eps(i,j) (i != j) and eps(i,j,k) (i, j, k distinct,
// j < k) of the IA-automorphism images, degree n over Q[t1..tn]^±.
Representation build_ia_generators(int n);

// Extension of the Gassner representation to the basis-conjugating
// automorphisms: images of all eps(i,j), degree n.
Representation build_rho_g(int n);

// Extension of the Burau representation to the conjugating automorphisms:
// images of all eps(i,j) and the adjacent transpositions alpha(i), degree n
// over Q[t]^±.
Representation build_rho_b(int n);

// Fixed column vector of the extension: (t1-1, ..., tn-1) for the Gassner
// extension, (1, ..., 1) for the Burau extension.
std::vector<LaurentPoly> fixed_vector(const Representation& rep);

struct BasisChange {
    LMatrix p;            // columns e_1..e_{n-1}, v
    Representation conj;  // images rewritten in the new basis
};

// Rewrites every image in the basis (e_1, ..., e_{n-1}, v), where v is the
// representation's fixed vector. In the stored column-action convention each
// rewritten image has last row (0, ..., 0, 1); this is asserted.
BasisChange change_of_basis(const Representation& rep);

// Degree-(n-1) composition factor: change basis and delete the last row and
// column of every image.
Representation composition_factor(const Representation& rep);

// Entrywise specialization of every image.
SpecializedRep specialize_rep(const Representation& rep, const Specialization& s);

// Transports a representation to a new context via the given variable
// renaming (see rename_vars); relabelling may merge variables.
Representation rename_rep_vars(const Representation& rep,
                               const std::map<std::string, std::string>& renames,
                               const Context& new_ctx);

// Tensor product over matching generator sets. Requires identical label
// sets (LabelMismatch otherwise) and disjoint contexts (ContextError). The
// result's context is a's variables followed by b's, and the Kronecker
// convention makes the first factor's index vary fastest.
Representation tensor_product(const Representation& a, const Representation& b);

// t1..tn for the Gassner-side families, {"t"} for the Burau-side ones.
Context default_context(Family family, int n);

}  // namespace bgx
