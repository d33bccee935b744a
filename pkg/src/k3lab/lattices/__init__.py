"""Even integer lattice algebra.

Gram matrices with arbitrary-precision integer entries, exact signatures by
congruence reduction, Smith normal form with transforms, discriminant
groups/forms, orthogonal complements and saturations, overlattices from glue
vectors, short-vector enumeration and the standard uniqueness/embedding
inequalities for even lattices.
"""

from k3lab.lattices.gram import GramLattice, direct_sum, named, rescale, signature
from k3lab.lattices.intmat import smith_normal_form
from k3lab.lattices.discform import (
    DiscForm,
    disc_form,
    disc_forms_isomorphic,
    nikulin_embeds,
    nikulin_unique,
)
from k3lab.lattices.construct import (
    Sublat,
    enhance,
    orth_complement,
    overlattice_from_glue,
    saturate_rows,
)
from k3lab.lattices.shortvec import represents_two_mod_four, short_vectors
from k3lab.lattices.files import lattice_from_json

__all__ = [
    "GramLattice",
    "direct_sum",
    "named",
    "rescale",
    "signature",
    "smith_normal_form",
    "DiscForm",
    "disc_form",
    "disc_forms_isomorphic",
    "nikulin_embeds",
    "nikulin_unique",
    "Sublat",
    "enhance",
    "orth_complement",
    "overlattice_from_glue",
    "saturate_rows",
    "represents_two_mod_four",
    "short_vectors",
    "lattice_from_json",
]
