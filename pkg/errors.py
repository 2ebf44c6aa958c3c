class NetlabError(Exception):
    """Base class for every domain error raised by netlab"""

    def __init__(self, detail: str = ""):
        super().__init__(detail)
        self.detail = detail

    def to_dict(self) -> dict:
        return {"error": self.__class__.__name__, "detail": self.detail}


class InvalidNetwork(NetlabError):
    """A network failed the simple-crossing validation"""


class ConstantTermZero(NetlabError):
    """Power series expansion requested for a denominator vanishing at t=0"""


class MissingVariable(NetlabError):
    """Polynomial evaluation without a value for one of its variables"""


class ZeroDenominator(NetlabError):
    """Division by zero inside a field operation"""


class NonBoundaryVertex(NetlabError):
    pass


class TrivialHomologyClass(NetlabError):
    pass


class SingularSystem(NetlabError):
    pass


class TruncationBoundExceeded(NetlabError):
    """A walk enumerator hit its hard length cap; indicates an engine bug"""


class WireOrientationMismatch(NetlabError):
    pass


class UnreducedNetwork(NetlabError):
    """The network still contains a contractible oriented cycle"""


class ExplosionGuard(NetlabError):
    pass


class NonConservative(NetlabError):
    pass


class PatternMismatch(NetlabError):
    """The local configuration does not match the requested move"""


class NonZeroWeight(NetlabError):
    pass


class NotParallel(NetlabError):
    pass


class OrientedTriangle(NetlabError):
    pass


class NotReduced(NetlabError):
    pass


class NotReducedWord(NetlabError):
    pass


class UndefinedEpsPhi(NetlabError):
    pass
