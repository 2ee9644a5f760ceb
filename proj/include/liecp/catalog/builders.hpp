#pragma once

#include <cstddef>

#include "liecp/liealg/lie_algebra.hpp"

namespace liecp::algebras {

/// Basis x1..xn (or the given prefix), all brackets zero.
LieAlgebra abelian(std::size_t n, const std::string& prefix = "x");
/// dim 2m+1; labels x, y, z for m = 1, else x1..xm, y1..ym, z; [x_i, y_i] = z.
LieAlgebra heisenberg(std::size_t m);
/// [x, y] = y
LieAlgebra twodim_nonabelian();
/// kE ⊕ V with E the identity on V = <v1..vn>.
LieAlgebra kE_plus_V(std::size_t n);
/// t, x, y, z with [t,x] = -x, [t,y] = y, [x,y] = z.
LieAlgebra diamond();
LieAlgebra g5();
LieAlgebra g6();
LieAlgebra h5();
LieAlgebra j5();
/// e, h, f with [e,h] = -2e, [e,f] = h, [h,f] = -2f.
LieAlgebra sl2();
/// sl2 ⋉ W2 (adjoint module on ue, uh, uf).
LieAlgebra sl2_w2();
/// Six-dimensional nilpotent algebras, items 4..11 of Morozov's list.
LieAlgebra morozov6(int item, const Rat& gamma = Rat(1));
/// Seven-dimensional algebras "37B", "37C", "37D", "357A", "357B", "357C".
LieAlgebra seeley(const std::string& kind);
/// Seeley's 1,2,4,5,7_N with parameter xi.
LieAlgebra seeley_12457N(const Rat& xi);
/// Eight-dimensional characteristically nilpotent algebra on e1..e8.
LieAlgebra dim8_dl();
/// V ⊕ Λ²V with [e_i, e_j] = e_i_j.
LieAlgebra wedge2(std::size_t n);

}  // namespace liecp::algebras
