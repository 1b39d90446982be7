import json

import pytest

from conftest import naive_t_stackable
from pycupstack.certificates.base import (
    CertificateMap,
    IndepSetCertificate,
    PendantPairCertificate,
    certificate_from_data,
    loads_certificates,
    read_certificates,
    write_certificates,
)
from pycupstack.certificates.classification import (
    BipartiteClass,
    classify_complete_bipartite,
    complete_bipartite_targets,
)
from pycupstack.certificates.lemmas import (
    cactus_hypothesis,
    check_indep_certificate,
    check_pendant_certificate,
    find_indep_certificate,
    issue_indep_certificate,
    prove_strongly_nonstackable,
    validate_certificate,
    validate_certificate_map,
)
from pycupstack.config import Config
from pycupstack.exceptions import FormatError, ParameterError
from pycupstack.graphs import families
from pycupstack.graphs.analysis import enumerate_connected_graphs
from pycupstack.search.stackability import decide_t_stackable


class TestIndependentSet:
    def test_cactus_hub(self, cactus_k2):
        leaves = range(2, 12)
        assert check_indep_certificate(cactus_k2, 0, leaves)
        certificate = issue_indep_certificate(cactus_k2, 0, leaves)
        assert (certificate.u_prime_size, certificate.w_size, certificate.ecc) == (5, 2, 2)

    def test_k24_large_class(self, k24):
        certificate = issue_indep_certificate(k24, 2, [2, 3, 4, 5])
        assert (certificate.u_prime_size, certificate.w_size, certificate.ecc) == (3, 2, 2)

    def test_path_centre(self):
        assert not check_indep_certificate(families.path(3), 1, [0, 2])

    def test_not_independent(self, k24):
        assert not check_indep_certificate(k24, 2, [0, 2, 3, 4, 5])

    def test_empty_set_on_a_single_vertex(self):
        assert not check_indep_certificate(families.path(1), 0, [])

    @pytest.mark.parametrize("u_set", [[7], [-1]])
    def test_out_of_range(self, k24, u_set):
        assert not check_indep_certificate(k24, 2, u_set)

    def test_found_on_every_cactus_target(self, cactus_k2):
        for t in cactus_k2.vertices():
            certificate = find_indep_certificate(cactus_k2, t)
            assert certificate is not None, t
            assert validate_certificate(cactus_k2, certificate)

    def test_greedy_on_a_larger_cactus(self):
        g = families.cactus(families.cycle(4), 9)
        assert g.n > Config().independent_set_budget
        for t in g.vertices():
            assert find_indep_certificate(g, t) is not None, t

    def test_connectivity_gadget(self):
        g = families.connectivity_gadget(2)
        for t in g.vertices():
            certificate = find_indep_certificate(g, t)
            assert certificate is not None, t
            assert certificate.u_prime_size > (certificate.ecc - 1) * certificate.w_size

    def test_mindeg_gadget(self):
        g = families.mindeg_gadget(families.path(2), 2)
        assert prove_strongly_nonstackable(g).complete

    @pytest.mark.parametrize("t", range(6))
    def test_absent_on_a_path(self, t):
        assert find_indep_certificate(families.path(6), t) is None

    def test_complete_graph(self):
        assert find_indep_certificate(families.complete(4), 0) is None

    def test_bad_target(self):
        with pytest.raises(ParameterError):
            find_indep_certificate(families.path(3), 3)


class TestPendantPair:
    @pytest.mark.parametrize("t, triple", [(0, (5, 6, 1)), (1, (2, 3, 0)), (2, (3, 4, 0))])
    def test_spiky(self, spiky_small, t, triple):
        certificate = check_pendant_certificate(spiky_small, t)
        assert (certificate.u, certificate.v, certificate.w) == triple
        assert validate_certificate(spiky_small, certificate)

    def test_star_centre(self):
        assert check_pendant_certificate(families.star(3), 0) is None

    def test_large_diameter(self):
        g = families.spider(3, 3)
        assert g.distances().diameter > 3
        assert check_pendant_certificate(g, 0) is None

    def test_tampered(self, spiky_small):
        assert not validate_certificate(spiky_small, PendantPairCertificate(0, 5, 2, 1))


class TestProve:
    def test_cactus(self, cactus_k2):
        result = prove_strongly_nonstackable(cactus_k2)
        assert result.complete
        assert validate_certificate_map(cactus_k2, result)

    def test_spiky_clique(self):
        g = families.spiky(11, [3] + [0] * 9 + [3])
        result = prove_strongly_nonstackable(g)
        assert result.complete
        assert all(result[t].kind == "pendant-pair" for t in result.covered)

    def test_stackable_graph(self):
        result = prove_strongly_nonstackable(families.f_graph(10))
        assert not result.complete
        assert result.covered == []

    def test_certificates_agree_with_search(self, cactus_k2, spiky_small, k24):
        for g in (cactus_k2, spiky_small, k24, families.double_star(3, 3)):
            result = prove_strongly_nonstackable(g)
            for t in result.covered:
                assert not decide_t_stackable(g, t).stackable, (g.describe(), t)

    @pytest.mark.parametrize("n", range(2, 6))
    def test_sound_on_small_graphs(self, n):
        for g in enumerate_connected_graphs(n):
            for t in prove_strongly_nonstackable(g).covered:
                assert not naive_t_stackable(g, t), (g.edges, t)

    def test_map_for_another_graph(self, cactus_k2, k24):
        result = prove_strongly_nonstackable(cactus_k2)
        assert not validate_certificate_map(k24, result)


class TestCactusHypothesis:
    @pytest.mark.parametrize("n, d, c, holds", [(2, 1, 5, True), (2, 1, 4, False), (4, 2, 9, True), (4, 2, 4, False)])
    def test_values(self, n, d, c, holds):
        assert cactus_hypothesis(n, d, c) is holds

    def test_too_small(self):
        with pytest.raises(ParameterError):
            cactus_hypothesis(1, 0, 3)


class TestCompleteBipartite:
    @pytest.mark.parametrize(
        "a, b, expected",
        [(3, 3, BipartiteClass.STACKABLE), (3, 4, BipartiteClass.STACKABLE), (2, 4, BipartiteClass.SMALLER_CLASS_ONLY)],
    )
    def test_classify(self, a, b, expected):
        assert classify_complete_bipartite(a, b) is expected

    def test_targets(self):
        assert complete_bipartite_targets(2, 4) == (True, True, False, False, False, False)
        assert complete_bipartite_targets(2, 3) == (True,) * 5

    @pytest.mark.parametrize("a, b", [(0, 3), (4, 3)])
    def test_bad_sizes(self, a, b):
        with pytest.raises(ParameterError):
            classify_complete_bipartite(a, b)


class TestSerialisation:
    def test_map_file(self, tmp_path, cactus_k2):
        result = prove_strongly_nonstackable(cactus_k2)
        path = tmp_path / "certificates.json"
        write_certificates(result, str(path))
        loaded = read_certificates(str(path))
        assert isinstance(loaded, CertificateMap)
        assert loaded.covered == result.covered
        assert validate_certificate_map(cactus_k2, loaded)
        assert json.loads(path.read_text())["complete"] is True

    def test_single(self):
        certificate = IndepSetCertificate(2, [5, 4, 3, 2], 3, 2, 2)
        loaded = loads_certificates(json.dumps(certificate.to_data()))
        assert loaded == certificate
        assert loaded.u_set == (2, 3, 4, 5)

    def test_tampered_quantity(self, k24):
        data = issue_indep_certificate(k24, 2, [2, 3, 4, 5]).to_data()
        data["ecc"] = 3
        assert not validate_certificate(k24, certificate_from_data(data))

    @pytest.mark.parametrize(
        "text",
        ["[", '{"kind": "clique"}', '{"kind": "pendant-pair", "target": 0}', "[1, 2]", '{"n": 2, "certificates": [{}]}'],
    )
    def test_malformed(self, text):
        with pytest.raises(FormatError):
            loads_certificates(text)
