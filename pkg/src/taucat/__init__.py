"""Tau-cluster morphism categories built from finite semidistributive lattices."""

from .catalog import get as catalog_entry
from .category import TccCategory, build_category, categories_isomorphic
from .congruence import (
    Congruence,
    congruence_from_contractions,
    congruence_from_partition,
    contracted_labels,
    identity_congruence,
    label_correspondence,
)
from .errors import TauCatError
from .functor import analyze, induced_functor, lift_interval, lift_interval_within
from .intervals import Interval, enumerate_join_interval_classes
from .lattice import Lattice, build_lattice, is_semidistributive, lattice_isomorphic, load_lattice
from .presentations import cw_f_vector, nerve_export, picture_group, picture_group_hom

__version__ = "0.1.0"
