"""Exception types shared across the package."""


class HypregError(Exception):
    """Base class for all package-specific errors."""


class NotSquarefree(HypregError):
    """The defining polynomial has a (numerically) repeated root."""


class IndicesCollide(HypregError):
    """Two of the marked Weierstrass indices coincide or are out of range."""


class ArcHitsBranchPoint(HypregError):
    """The positive-real locus of h passes too close to an unmarked branch point."""


class PathTooCloseToBranchPoint(HypregError):
    """An interior path point approaches the branch set below the step threshold."""


class SeedMismatch(HypregError):
    """The starting y value does not lie on the curve over the path start."""


class CannotAvoidMarkedPoints(HypregError):
    """Loop construction would pass within tolerance of a marked point."""


class SubsetNotSeparable(HypregError):
    """No circle separates the requested branch subset from its complement."""


class EvenSubset(HypregError):
    """Separating subsets must contain an odd number of branch points."""


class DegenerateLoop(HypregError):
    """The requested loop is contractible (single branch point subset)."""


class NonTransverse(HypregError):
    """Two paths overlap tangentially; no well-defined crossing count."""


class PoleOnPath(HypregError):
    """A differential form has a pole on the interior of an integration path."""


class NoConvergence(HypregError):
    """Quadrature failed to reach the requested error estimate."""


class SingularPeriodMatrix(HypregError):
    """The matrix of A-periods is numerically singular."""


class SingularSystem(HypregError):
    """The linear system defining the dual harmonic basis is degenerate."""


class RankDeficient(HypregError):
    """The period lattice generators do not have full rank."""


class DNotNullHomologous(HypregError):
    """The separating loop has a nonzero period; identity check aborted."""


class NotInKernel(HypregError):
    """Automorphism acts nontrivially below the requested Johnson degree."""


class BadSplit(HypregError):
    """Invalid genus split for a bounding pair (need 0 < g1 < g)."""


class ConfigParse(HypregError):
    """Run configuration file could not be parsed."""
