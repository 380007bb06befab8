#include "kodim/catalog_io.hpp"

namespace kodim {

namespace {

// Built-in table of model geometries in dimensions 0 through 5.
//
// Naming is plain ASCII: superscripts/subscripts are flattened (Nil3,
// Sol4_0, A5_7^a,b,-1-a-b), a trailing 't' stands for a tilde (universal
// cover, as in SL2t), 'xs' marks a semidirect product, and 'x_R'/'x_a'/
// 'x_S1' mark twisted products. Decomposition notes whose first word is
// "product" identify direct product splittings; other notes describe how
// the fibration arises.
constexpr std::string_view kBuiltinCatalog = R"cat(
# ---------------------------------------------------------------- dim 0

name: point
dim: 0
class: point
alias: pt

# ---------------------------------------------------------------- dim 1

name: R
dim: 1
class: euclidean
alias: R1
alias: E1
alias: line

# ---------------------------------------------------------------- dim 2

name: S2
dim: 2
class: compact

name: R2
dim: 2
class: euclidean
alias: E2

name: H2
dim: 2
class: irr_symmetric_noncompact

# ---------------------------------------------------------------- dim 3

name: S3
dim: 3
class: compact

name: R3
dim: 3
class: euclidean
alias: E3

name: Nil3
dim: 3
class: nilpotent

name: Sol3
dim: 3
class: solvable

name: H3
dim: 3
class: irr_symmetric_noncompact

name: S2xR
dim: 3
class: fibered
fib: S2 | R # product

name: H2xR
dim: 3
class: fibered
fib: R | H2 # virtually a trivial circle bundle over a hyperbolic surface

name: SL2t
dim: 3
class: fibered
fib: R | H2 # virtually a nontrivial circle bundle over a hyperbolic surface
alias: SL2~
alias: SL2R

# ---------------------------------------------------------------- dim 4

name: S4
dim: 4
class: compact

name: CP2
dim: 4
class: compact

name: S2xS2
dim: 4
class: compact

name: R4
dim: 4
class: euclidean
alias: E4

name: Nil4
dim: 4
class: nilpotent

name: Nil3xR
dim: 4
class: nilpotent

name: Sol4_0
dim: 4
class: solvable

name: Sol4_1
dim: 4
class: solvable

name: Sol4_m,n
dim: 4
class: solvable
alias: Sol3xR
note: one record for the whole exponent family; the m=n case is Sol3xR

name: H4
dim: 4
class: irr_symmetric_noncompact

name: H2(C)
dim: 4
class: irr_symmetric_noncompact
alias: CH2
alias: H2C

name: H2xH2
dim: 4
class: irr_symmetric_noncompact
note: reducible as a product of hyperbolic planes but recorded once with the symmetric-space reading

name: S2xR2
dim: 4
class: fibered
fib: S2 | R2 # product

name: S2xH2
dim: 4
class: fibered
fib: S2 | H2 # product

name: S3xR
dim: 4
class: fibered
fib: S3 | R # product

name: H2xR2
dim: 4
class: fibered
fib: H2 | R2 # product

name: SL2txR
dim: 4
class: fibered
fib: SL2t | R # product

name: H3xR
dim: 4
class: fibered
fib: H3 | R # product
fib: H2 | R2 # surface bundle presentation from a fibered hyperbolic factor

name: F4
dim: 4
class: fibered
fib: R2 | H2 # torus bundle over a hyperbolic base (punctured in the honest realization)
compact_rep: false

# ---------------------------------------------------------------- dim 5

name: S5
dim: 5
class: compact

name: SU(3)/SO(3)
dim: 5
class: compact
alias: SU3/SO3
alias: Wu

name: S2xS3
dim: 5
class: compact

name: R5
dim: 5
class: euclidean
alias: E5

name: Nil3xR2
dim: 5
class: nilpotent

name: Nil4xR
dim: 5
class: nilpotent

name: Nil5
dim: 5
class: nilpotent

name: A5_1
dim: 5
class: nilpotent

name: A5_2
dim: 5
class: nilpotent

name: A5_3
dim: 5
class: nilpotent

name: A5_5
dim: 5
class: nilpotent

name: A5_6
dim: 5
class: nilpotent

name: Sol4_0xR
dim: 5
class: solvable

name: Sol4_1xR
dim: 5
class: solvable

name: Sol4_m,nxR
dim: 5
class: solvable
alias: Sol3xR2
note: family record; the m=n case is Sol3xR2

name: A5_7^a,b,-1-a-b
dim: 5
class: solvable
note: exponent family with generic parameters

name: A5_7^1,-1-a,-1+a
dim: 5
class: solvable

name: A5_7^1,-1,-1
dim: 5
class: solvable

name: A5_8^-1
dim: 5
class: solvable

name: A5_9^-1,-1
dim: 5
class: solvable

name: A5_15^-1
dim: 5
class: solvable

name: A5_20^0
dim: 5
class: solvable

name: A5_33^-1,-1
dim: 5
class: solvable

name: H5
dim: 5
class: irr_symmetric_noncompact

name: SL(3,R)/SO(3)
dim: 5
class: irr_symmetric_noncompact
alias: SL3R/SO3

name: S2xS2xR
dim: 5
class: fibered
fib: S2xS2 | R # product

name: S2xR3
dim: 5
class: fibered
fib: S2 | R3 # product

name: S2xNil3
dim: 5
class: fibered
fib: S2 | Nil3 # product

name: S2xSol3
dim: 5
class: fibered
fib: S2 | Sol3 # product

name: S2xH2xR
dim: 5
class: fibered
fib: S2 | H2xR # product

name: S2xSL2t
dim: 5
class: fibered
fib: S2 | SL2t # product

name: S2xH3
dim: 5
class: fibered
fib: S2 | H3 # product

name: S3xR2
dim: 5
class: fibered
fib: S3 | R2 # product

name: S3xH2
dim: 5
class: fibered
fib: S3 | H2 # product

name: S4xR
dim: 5
class: fibered
fib: S4 | R # product

name: CP2xR
dim: 5
class: fibered
fib: CP2 | R # product

name: Nil3x_RS3
dim: 5
class: fibered
fib: S3 | R2 # twisted product with spherical fiber over the plane

name: SL2tx_aS3
dim: 5
class: fibered
fib: S3 | H2 # twisted product with spherical fiber over a hyperbolic base

name: L(a,1)x_S1L(b,1)
dim: 5
class: fibered
fib: S3 | S2 # twisted product of lens spaces glued along circle fibers
alias: L(a,1)xL(b,1)

name: T1(H3)
dim: 5
class: fibered
fib: S2 | H3 # unit sphere fiber over hyperbolic space
alias: T1H3

name: H2xR3
dim: 5
class: fibered
fib: H2 | R3 # product

name: H2xNil3
dim: 5
class: fibered
fib: H2 | Nil3 # product
alias: Nil3xH2

name: H2xSol3
dim: 5
class: fibered
fib: H2 | Sol3 # product
alias: Sol3xH2

name: R2xSL2t
dim: 5
class: fibered
fib: R2 | SL2t # product
alias: SL2txR2

name: R2xsSL2t
dim: 5
class: fibered
fib: R2 | SL2t # twisted product by a semidirect plane action

name: Nil3x_RSL2t
dim: 5
class: fibered
fib: Nil3 | H2 # twisted product with nilpotent fiber

name: H3xR2
dim: 5
class: fibered
fib: H3 | R2 # product

name: H2xSL2t
dim: 5
class: fibered
fib: R | H2xH2 # virtually a trivial circle bundle over a product of hyperbolic surfaces

name: H2xH2xR
dim: 5
class: fibered
fib: R | H2xH2 # product

name: SL2tx_aSL2t
dim: 5
class: fibered
fib: R | H2xH2 # virtually a nontrivial circle bundle over a product of hyperbolic surfaces

name: H4xR
dim: 5
class: fibered
fib: R | H4 # product

name: H2(C)xR
dim: 5
class: fibered
fib: R | H2(C) # product

name: U(2,1)/U(2)t
dim: 5
class: fibered
fib: R | H2(C) # circle bundle over the complex-hyperbolic plane
alias: U21t

name: H3xH2
dim: 5
class: fibered
fib: H3 | H2 # product
alias: H2xH3

name: F4xR
dim: 5
class: fibered
fib: F4 | R # product
compact_rep: false

name: T1(R1,2)
dim: 5
class: fibered
fib: R | F4 # circle bundle over F4
compact_rep: false

name: F5_0
dim: 5
class: fibered
fib: R | F4 # circle bundle over F4
compact_rep: false

name: F5_1
dim: 5
class: fibered
fib: R | F4 # circle bundle over F4
compact_rep: false
)cat";

}  // namespace

std::string_view builtin_catalog_text() { return kBuiltinCatalog; }

}  // namespace kodim
