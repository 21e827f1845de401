"""Exception hierarchy.

Every error carries the CLI exit code it maps to, so the command layer can
translate failures without a lookup table.
"""


class TauCatError(Exception):
    exit_code = 1

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InvalidInput(TauCatError):
    """Malformed file, bad schema, or out-of-range index."""


# -- not a lattice (exit 2) --------------------------------------------------

class LatticeError(TauCatError):
    exit_code = 2


class NotAPoset(LatticeError):
    pass


class NotALattice(LatticeError):
    pass


class NoBoundedExtremes(LatticeError):
    pass


class RedundantCover(LatticeError):
    pass


# -- not semidistributive / labelling fails (exit 3) -------------------------

class NotSemidistributive(TauCatError):
    exit_code = 3


class NoMinimumLabel(NotSemidistributive):
    pass


# -- torsion-type obstructions (exit 4) --------------------------------------

class ObstructionError(TauCatError):
    exit_code = 4


class TorsionTypeObstruction(ObstructionError):
    pass


class CompositionFailure(ObstructionError):
    pass


class MixedContraction(ObstructionError):
    pass


class CorrespondenceFailure(ObstructionError):
    pass


class ImageNotJoinInterval(ObstructionError):
    pass


class WellDefinednessFailure(ObstructionError):
    pass


class LiftFailure(ObstructionError):
    pass


class RelationImageUnmatched(ObstructionError):
    pass


class TheoremMismatch(ObstructionError):
    pass


# -- congruence input problems (exit 1) --------------------------------------

class NotACover(InvalidInput):
    pass


class NotACongruence(InvalidInput):
    pass


class ClassNotInterval(TauCatError):
    exit_code = 4


class SizeBound(InvalidInput):
    pass
