"""Movable cones of Calabi-Yau complete intersections in products of
projective spaces: exact reflection-group machinery, descent to nef,
boundary cones, Lorentzian sweeps and numerical dimensions."""

from .cones import (
    ConeDescription,
    DescentResult,
    DivisorClass,
    boundary_cones,
    chamber_orbit,
    effectivity_witness,
    limit_direction,
    pair_eigendata,
    reduce_to_nef,
    reduced_word_count,
    s_value,
)
from .coxeter import (
    GramMatrix,
    PairEigenpair,
    ReducedWord,
    ReflectionRep,
    bilinear_form,
    involution_matrix,
    is_lorentzian,
    pair_char_poly,
    pair_dominant_eigenpair,
    partition_gram,
    reflection_rep,
    restrict_to_J,
    signature,
    word_matrix,
)
from .intersection import (
    BMatrixData,
    CycleClass,
    b_coefficient,
    b_matrix,
    cycle_class,
    pair_b_closed_form,
)
from .numdim import SpectralReport, nu_vol, spectral_report
from .quadratic import QuadraticNumber
from .render import RenderOptions, SliceScene, build_scene, emit_svg, render_variety

# the sweep driver stays namespaced (movcone.sweep.sweep): exporting the
# function here would shadow the submodule attribute
from .sweep import SweepReport, SweepTask, check_task, enumerate_partitions
from .variety import ValidatedVariety, VarietySpec, load, parse_spec, validate

__version__ = "0.1.0"

__all__ = [
    "BMatrixData",
    "ConeDescription",
    "CycleClass",
    "DescentResult",
    "DivisorClass",
    "GramMatrix",
    "PairEigenpair",
    "QuadraticNumber",
    "ReducedWord",
    "ReflectionRep",
    "RenderOptions",
    "SliceScene",
    "SpectralReport",
    "SweepReport",
    "SweepTask",
    "ValidatedVariety",
    "VarietySpec",
    "b_coefficient",
    "b_matrix",
    "bilinear_form",
    "boundary_cones",
    "build_scene",
    "chamber_orbit",
    "check_task",
    "cycle_class",
    "effectivity_witness",
    "emit_svg",
    "enumerate_partitions",
    "involution_matrix",
    "is_lorentzian",
    "limit_direction",
    "load",
    "nu_vol",
    "pair_b_closed_form",
    "pair_char_poly",
    "pair_dominant_eigenpair",
    "pair_eigendata",
    "parse_spec",
    "partition_gram",
    "reduce_to_nef",
    "reduced_word_count",
    "reflection_rep",
    "render_variety",
    "restrict_to_J",
    "s_value",
    "signature",
    "spectral_report",
    "validate",
    "word_matrix",
]
