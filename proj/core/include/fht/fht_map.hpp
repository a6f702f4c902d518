#pragma once

#include <cstdint>

#include "fht/characters.hpp"
#include "fht/root_system.hpp"
#include "fht/verlinde.hpp"

namespace fht {

// Weyl numerator character of R_lambda:
//   sum_{w in W} (-1)^{l(w)} e_{w(lambda+rho)-rho};  exactly |W| terms.
FormalCharacter weyl_numerator(const RootSystem& rs, const Weight& lambda);

// Character of the Z_2-graded T-representation /\ n_-:
//   prod_{alpha in R_-} (1 - e_alpha).
FormalCharacter wedge_n_minus_char(const RootSystem& rs);

// Exact check of chi(R_lambda^T) = chi(R_lambda|_T) * chi(/\ n_-).
bool numerator_identity_check(const RootSystem& rs, const Weight& lambda,
                              FreudenthalCache* cache = nullptr);

// The generator image sum_{w in W_aff} (-1)^{l(w)} e_{w .__l lambda},
// truncated to the coordinate box [-window, window]^rank.
FormalCharacter fht_image(const RootSystem& rs, const Weight& lambda, std::int64_t k,
                          std::int64_t window);

// The same image as an alternating character: the basis delta at lambda.
AlternatingCharacter fht_image_alternating(const RootSystem& rs, const Weight& lambda,
                                           std::int64_t k);

// Character of the assembled module: weyl_numerator(lambda) times the lattice
// comb sum_eta e_{l*b_flat(eta)}, truncated to the window box.  With
// comb_radius < 0 the comb is sized so the truncation is exact on the box
// (margin = max |support(weyl_numerator)|_inf); a nonnegative comb_radius is
// used literally (0 keeps only e_0).
FormalCharacter assembly_character(const RootSystem& rs, const Weight& lambda, std::int64_t k,
                                   std::int64_t window, std::int64_t comb_radius = -1);

// Read an alternating character at level l = k + h_dual back into R_k(G).
// Requires level >= h_dual + 1.
FusionElement inverse_fht(const RootSystem& rs, const AlternatingCharacter& ac);

} // namespace fht
