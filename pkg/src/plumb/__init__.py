"""Exact signatures, Coxeter spectra and omega-signatures of tree-like Hopf plumbings."""

__version__ = "0.1.0"

from plumb.coxeter import (  # noqa: E402
    CoxeterMatrix,
    SpectrumClassification,
    bicolored_order,
    classify_spectrum,
    coxeter_transformation,
    monodromy_correspondence_check,
    reflection_matrix,
)
from plumb.decompose import Certificate, DecompositionStep, lemma1_decompose, verify_certificate  # noqa: E402
from plumb.forms import (  # noqa: E402
    DivideCombinatorics,
    SeifertMatrix,
    SymmetricForm,
    coxeter_form,
    divide_form,
    example1_form,
    plumb_band,
    plumb_trefoil,
    seifert_matrix,
    spiral_blocks,
    spiral_form,
    symmetrized_form,
)
from plumb.linalg import (  # noqa: E402
    GaussianRational,
    Inertia,
    alexander_poly,
    char_poly,
    determinant,
    hermitian_inertia,
    inertia,
)
from plumb.omega import (  # noqa: E402
    MINUS_ONE,
    CirclePoint,
    SignatureProfile,
    omega_signature,
    separating_points,
    signature_profile,
    verify_prop_D,
    verify_theorem_A,
)
from plumb.polynomials import (  # noqa: E402
    Poly,
    SquarefreeDecomposition,
    circle_root_count,
    isolate_circle_roots,
    positive_real_root_count,
    reciprocal_split,
    squarefree_decomposition,
)
from plumb.smith import nullity_at_factor, smith_normal_form  # noqa: E402
from plumb.sweeps import (  # noqa: E402
    SweepReport,
    conjecture1_scan,
    optimal_family_check,
    sweep_slalom,
    sweep_spiral,
    sweep_trees,
)
from plumb.trees import (  # noqa: E402
    Forest,
    Tree,
    canonical_code,
    enumerate_free_trees,
    enumerate_planted_trees,
    glue,
    parse_tree,
    slalom_transform,
    subdivide,
)
