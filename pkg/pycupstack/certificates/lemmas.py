"""Finding and checking non-stackability certificates

Both certificates are checked in polynomial time. The independent set certificate is
searched for by branch and bound on small graphs and greedily on larger ones, so not
finding one says nothing about stackability.
"""

import logging

from ..config import resolve
from ..exceptions import ParameterError
from .base import CertificateMap, IndepSetCertificate, PendantPairCertificate

logger = logging.getLogger(__name__)


def _valid_target(g, t):
    return 0 <= t < g.n


def _indep_quantities(g, t, u_set):
    # (|U'|, |W|, eccentricity of t), or None if the inputs do not describe an independent set
    if not _valid_target(g, t) or not g.is_connected():
        return None
    u_set = set(u_set)
    if any(not 0 <= x < g.n for x in u_set):
        return None
    for x in u_set:
        if u_set & g.neighbors(x):
            return None
    d = g.distances()
    rows = d.rows
    u_prime = sum(1 for x in u_set if rows[x][t] >= 2)
    return u_prime, g.n - len(u_set), d.eccentricity(t)


def check_indep_certificate(g, t, u_set):
    """True if u_set is an independent set proving that g is not t-stackable

    :param g: The graph
    :type g: :class:`pycupstack.graphs.base.Graph`
    :param t: The target
    :type t: int
    :param u_set: The independent set
    :type u_set: iterable of int
    :rtype: bool
    """
    quantities = _indep_quantities(g, t, u_set)
    if quantities is None:
        return False
    u_prime, w, ecc = quantities
    return u_prime >= 1 and u_prime > (ecc - 1) * w


def issue_indep_certificate(g, t, u_set):
    """The certificate for u_set, or None if it does not prove anything"""
    if not check_indep_certificate(g, t, u_set):
        return None
    u_prime, w, ecc = _indep_quantities(g, t, u_set)
    return IndepSetCertificate(t, u_set, u_prime, w, ecc)


def _branch_and_bound(g, weights, threshold):
    # An independent set of total weight above threshold, as a bit mask, or None.
    masks = g.adjacency_masks
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))

    def branch(candidates, chosen, weight):
        if weight > threshold:
            return chosen
        if not candidates:
            return None
        if weight + sum(weights[v] for v in order if candidates >> v & 1) <= threshold:
            return None
        v = next(v for v in order if candidates >> v & 1)
        bit = 1 << v
        found = branch(candidates & ~bit & ~masks[v], chosen | bit, weight + weights[v])
        if found is not None:
            return found
        return branch(candidates & ~bit, chosen, weight)

    return branch((1 << g.n) - 1, 0, 0)


def _greedy(g, weights, threshold):
    chosen = 0
    blocked = 0
    total = 0
    masks = g.adjacency_masks
    # heaviest per closed neighbourhood first
    for v in sorted(range(g.n), key=lambda v: (-weights[v] / (g.degree(v) + 1), v)):
        if blocked >> v & 1:
            continue
        chosen |= 1 << v
        blocked |= masks[v] | 1 << v
        total += weights[v]
    return chosen if total > threshold else None


def find_indep_certificate(g, t, config=None):
    """Search for an independent set certificate

    Adding x to U adds e - 1 to (e - 1)|U| and one more to |U'| when x is at distance at
    least 2 from t, so a certificate is an independent set whose weights sum to more
    than (e - 1)n. The search is exact up to ``independent_set_budget`` vertices.

    :param g: A connected graph
    :type g: :class:`pycupstack.graphs.base.Graph`
    :param t: The target
    :type t: int
    :rtype: :class:`pycupstack.certificates.base.IndepSetCertificate` or None
    """
    config = resolve(config)
    if not _valid_target(g, t):
        raise ParameterError("target {} is not a vertex of {}".format(t, g.describe()))
    g.require_connected()
    d = g.distances()
    ecc = d.eccentricity(t)
    if ecc < 2:
        return None
    rows = d.rows
    weights = [ecc - 1 + (1 if rows[x][t] >= 2 else 0) for x in range(g.n)]
    threshold = (ecc - 1) * g.n
    if g.n <= config.independent_set_budget:
        chosen = _branch_and_bound(g, weights, threshold)
    else:
        logger.debug("%s has %d vertices, trying a greedy independent set", g.describe(), g.n)
        chosen = _greedy(g, weights, threshold)
    if chosen is None:
        return None
    return issue_indep_certificate(g, t, [v for v in range(g.n) if chosen >> v & 1])


def check_pendant_triple(g, t, u, v, w):
    """True if u and v are leaves on w at distance 2 from t in a graph of diameter at most 3"""
    if not all(0 <= x < g.n for x in (t, u, v, w)) or u == v:
        return False
    if not g.is_connected() or g.distances().diameter > 3:
        return False
    rows = g.distances().rows
    return all(g.degree(x) == 1 and g.has_edge(x, w) and rows[x][t] == 2 for x in (u, v))


def check_pendant_certificate(g, t):
    """Look for two leaves with a common neighbour at distance 2 from t

    The first such (u, v, w) in lexicographic order is returned.

    :param g: The graph
    :type g: :class:`pycupstack.graphs.base.Graph`
    :param t: The target
    :type t: int
    :rtype: :class:`pycupstack.certificates.base.PendantPairCertificate` or None
    """
    if not _valid_target(g, t):
        raise ParameterError("target {} is not a vertex of {}".format(t, g.describe()))
    if not g.is_connected() or g.distances().diameter > 3:
        return None
    rows = g.distances().rows
    triples = []
    for w in range(g.n):
        leaves = sorted(x for x in g.neighbors(w) if g.degree(x) == 1 and rows[x][t] == 2)
        if len(leaves) >= 2:
            triples.append((leaves[0], leaves[1], w))
    if not triples:
        return None
    u, v, w = min(triples)
    return PendantPairCertificate(t, u, v, w)


def validate_certificate(g, certificate):
    """Re-derive every recorded quantity of a certificate on g

    :rtype: bool
    """
    if isinstance(certificate, PendantPairCertificate):
        c = certificate
        return check_pendant_triple(g, c.target, c.u, c.v, c.w)
    if isinstance(certificate, IndepSetCertificate):
        reissued = issue_indep_certificate(g, certificate.target, certificate.u_set)
        return reissued is not None and reissued == certificate
    return False


def validate_certificate_map(g, certificates):
    """True if the map is for a graph of g's order and every certificate holds on g"""
    if certificates.n != g.n:
        return False
    return all(
        t == c.target and validate_certificate(g, c) for t, c in certificates.certificates.items()
    )


def prove_strongly_nonstackable(g, config=None):
    """Certify as many targets as possible, the pendant test first

    :param g: A connected graph
    :type g: :class:`pycupstack.graphs.base.Graph`
    :return: The certificates found; complete if every target is covered
    :rtype: :class:`pycupstack.certificates.base.CertificateMap`
    """
    config = resolve(config)
    g.require_connected()
    certificates = {}
    for t in range(g.n):
        certificate = check_pendant_certificate(g, t) or find_indep_certificate(g, t, config)
        if certificate is not None:
            certificates[t] = certificate
    result = CertificateMap(g.n, certificates)
    if result.complete:
        logger.info("%s is strongly non-stackable, every target certified", g.describe())
    else:
        logger.info("certified %d of %d targets of %s", len(result), g.n, g.describe())
    return result


def cactus_hypothesis(n, d, c):
    """Whether the c-cactus of a connected graph with n vertices and diameter d is certified

    The condition is c > (d + 1)n / (n - 1).
    """
    if n < 2:
        raise ParameterError("the cactus condition needs n >= 2, got {}".format(n))
    return c * (n - 1) > (d + 1) * n
