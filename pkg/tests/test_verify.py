
import pytest

from refpoly.polytope import NotReflexive, build_polytope, is_reflexive
from refpoly.skeleton import k_skeleton_points, roots
from refpoly.verify import (
    RootCertificate,
    cross_polytope,
    cube,
    root_certificate,
    simplex,
    standard_corpus,
    verify_corpus,
    verify_theorem,
)


class TestCertificate:
    def test_cube_roots(self, cube3):
        skel = set(k_skeleton_points(cube3, 1))
        for r in roots(cube3):
            cert = root_certificate(cube3, r.point)
            assert cert.is_valid() and set(cert.generators) <= skel

    def test_hand_certificate(self):
        # e1 = (1,0,1) + (1,1,0) - (1,1,1), all on edges of the cube
        c = RootCertificate((1, 0, 0), ((1, 0, 1), (1, 1, 0), (1, 1, 1)), (1, 1, -1))
        assert c.is_valid()
        assert not RootCertificate((1, 0, 0), ((1, 0, 1),), (1,)).is_valid()

    def test_simplex_dual(self, simplex3_dual):
        for r in roots(simplex3_dual):
            assert root_certificate(simplex3_dual, r.point).evaluate() == r.point

    def test_rejects_non_root(self, cube3):
        with pytest.raises(ValueError):
            root_certificate(cube3, (1, 1, 1))

    def test_rejects_low_dim(self, big_triangle):
        with pytest.raises(ValueError):
            root_certificate(big_triangle, (0, -1))


class TestVerify:
    def test_cube(self, cube3):
        rep = verify_theorem(cube3, "cube")
        assert rep.passed and rep.fatal is None
        assert rep.flags == {"lambda_n-2=lambda_n-1": True, "lambda_n-1=lambda_n": True, "lambda_n-1=M": True}
        assert len(rep.certificates) == 6
        assert rep.lemmas["violations"] == 0

    def test_exceptional_polygon_flag(self, big_triangle):
        rep = verify_theorem(big_triangle)
        assert rep.passed and not rep.flags["lambda_n-2=lambda_n-1"]
        assert rep.lambdas[0].index == 3

    def test_not_reflexive(self):
        P = build_polytope([(2, 0), (0, 2), (-2, -2)])
        with pytest.raises(NotReflexive):
            verify_theorem(P)
        rep = verify_theorem(P, strict=False)
        assert not rep.reflexive and rep.passed

    def test_lemmas_opt_in_for_4d(self):
        assert verify_theorem(cube(4)).lemmas is None
        assert verify_theorem(cube(4), lemmas=True).lemmas["violations"] == 0

    def test_broken_certificate_fails(self, cube3):
        rep = verify_theorem(cube3)
        rep.certificates[0] = RootCertificate(rep.certificates[0].root, ((1, 1, 1),), (1,))
        assert not rep.passed

    def test_deterministic(self, simplex3_dual):
        assert verify_theorem(simplex3_dual) == verify_theorem(simplex3_dual)


class TestCorpus:
    def test_sizes(self):
        assert len(standard_corpus(2)) == 16
        three = [e for e in standard_corpus(3) if len(e.polytope.vertices[0]) == 3]
        assert len(three) == 4 + 16
        four = [e for e in standard_corpus(4) if e.polytope.dim == 4]
        assert len(four) == 4 + 136

    def test_ids_unique_and_reflexive(self):
        entries = standard_corpus(4)
        assert len({e.id for e in entries}) == len(entries)
        assert all(is_reflexive(e.polytope) for e in entries)

    def test_builders(self):
        assert len(cross_polytope(3).vertices) == 6
        assert len(simplex(4).vertices) == 5

    def test_bad_dim(self):
        with pytest.raises(ValueError):
            standard_corpus(5)

    def test_parallel_preserves_order(self):
        entries = standard_corpus(3)[14:22]
        serial = verify_corpus(entries)
        parallel = verify_corpus(entries, jobs=2)
        assert [r.id for r in parallel] == [e.id for e in entries]
        assert serial == parallel
