"""Which complete bipartite graphs are stackable"""

from enum import Enum

from ..exceptions import ParameterError


class BipartiteClass(Enum):
    STACKABLE = "stackable"
    SMALLER_CLASS_ONLY = "stackable-only-from-smaller-class"


def classify_complete_bipartite(a, b):
    """K_{a,b} is stackable when b is a or a + 1; otherwise exactly the smaller class can be targeted

    :param a: Size of the smaller class
    :type a: int
    :param b: Size of the larger class
    :type b: int
    :rtype: :class:`BipartiteClass`
    """
    if not 1 <= a <= b:
        raise ParameterError("need 1 <= a <= b, got a={} b={}".format(a, b))
    if b in (a, a + 1):
        return BipartiteClass.STACKABLE
    return BipartiteClass.SMALLER_CLASS_ONLY


def complete_bipartite_targets(a, b):
    """Per vertex of :func:`pycupstack.graphs.families.complete_bipartite` (a, b), whether it can be targeted

    :rtype: tuple of bool
    """
    if classify_complete_bipartite(a, b) is BipartiteClass.STACKABLE:
        return (True,) * (a + b)
    return (True,) * a + (False,) * b
