import itertools
from collections import deque

import pytest

from mayadeg.errors import OracleSizeError
from mayadeg.oracle import (
    MAX_COSETS, adjacency_graph, bruhat_closure, pareto_min_degrees,
    verify_space,
)
from mayadeg.qdegree import degree_leq, greedy_min_degree
from mayadeg.weyl import (
    FlagShape, bruhat_leq_full, enumerate_cosets, identity_coset, parse_coset,
    parse_flag,
)


def achievable_degrees(v, w, cap):
    """Every degree <= cap of some chain, by plain BFS over (coset, degree) states."""
    shape = v.shape
    edges = {}
    for e in adjacency_graph(shape):
        edges.setdefault(e.source, []).append((e.target, e.degree))
    start = [(u, (0,) * shape.k) for u in enumerate_cosets(shape) if bruhat_leq_full(u.perm, v.perm)]
    seen = set(start)
    queue = deque(start)
    out = set()
    while queue:
        u, d = queue.popleft()
        if bruhat_leq_full(w.perm, u.perm):
            out.add(d)
        for x, step in edges[u]:
            e = tuple(a + b for a, b in zip(d, step))
            if degree_leq(e, cap) and (x, e) not in seen:
                seen.add((x, e))
                queue.append((x, e))
    return out


def minimal(degrees):
    return frozenset(d for d in degrees if not any(e != d and degree_leq(e, d) for e in degrees))


class TestAdjacency:
    def test_projective_line(self):
        shape = FlagShape(2, (1,))
        edges = adjacency_graph(shape)
        assert len(edges) == 2
        assert {(str(e.source), str(e.target), e.degree) for e in edges} == {("1", "2", (1,)), ("2", "1", (1,))}

    def test_small_flag_labels(self):
        edges = adjacency_graph(parse_flag("1,2/3"))
        assert len({e.source for e in edges}) == 6
        assert {e.degree for e in edges} == {(1, 0), (0, 1), (1, 1)}

    def test_edge_count(self):
        shape = parse_flag("1,2/4")
        cross = sum(1 for a, b in itertools.combinations(range(1, 5), 2)
                    if shape.block_of(a) != shape.block_of(b))
        assert cross == 5
        assert len(adjacency_graph(shape)) == 12 * cross

    @pytest.mark.parametrize("flag", ["1,2/4", "1,3/5", "2/5"])
    def test_labels_positive(self, flag):
        for e in adjacency_graph(parse_flag(flag)):
            assert e.source != e.target
            assert any(e.degree)

    def test_size_guard(self):
        big = parse_flag("1,3,5,7,9/13")
        with pytest.raises(OracleSizeError):
            adjacency_graph(big)
        with pytest.raises(OracleSizeError):
            bruhat_closure(big)
        with pytest.raises(OracleSizeError):
            verify_space(big)
        assert MAX_COSETS == 50_000


class TestPareto:
    def test_identity_to_longest(self):
        shape = parse_flag("1,2/3")
        v, w = parse_coset(shape, "1|2"), parse_coset(shape, "3|2")
        assert pareto_min_degrees(v, w, (2, 2)) == {(1, 1)}
        assert minimal(achievable_degrees(v, w, (2, 2))) == {(1, 1)}

    def test_small_flag(self):
        shape = parse_flag("1,2/3")
        v, w = parse_coset(shape, "2|1"), parse_coset(shape, "1|3")
        assert pareto_min_degrees(v, w, (2, 2)) == {(0, 1)}
        assert greedy_min_degree(v, w)[0] == (0, 1)

    def test_dominating_pair(self):
        shape = parse_flag("1,3/5")
        cosets = list(enumerate_cosets(shape))
        for v, w in itertools.product(cosets, repeat=2):
            has_zero = (0, 0) in pareto_min_degrees(v, w, (1, 1))
            assert has_zero == bruhat_leq_full(w.perm, v.perm)
            if has_zero:
                assert pareto_min_degrees(v, w, (1, 1)) == {(0, 0)}

    @pytest.mark.parametrize("flag, cap", [("1,2/3", (3, 3)), ("1,2/4", (2, 2)), ("2/4", (3,)), ("1,3/4", (2, 2))])
    def test_matches_unpruned_search(self, flag, cap):
        shape = parse_flag(flag)
        cosets = list(enumerate_cosets(shape))
        for v, w in itertools.product(cosets, repeat=2):
            assert pareto_min_degrees(v, w, cap) == minimal(achievable_degrees(v, w, cap))

    @pytest.mark.parametrize("flag", ["1,2/4", "2/5", "1,3/5"])
    def test_uncapped_singleton(self, flag):
        shape = parse_flag(flag)
        cosets = list(enumerate_cosets(shape))
        for v, w in itertools.product(cosets, repeat=2):
            found = pareto_min_degrees(v, w)
            assert found == {greedy_min_degree(v, w)[0]}
            # antichain
            assert all(not degree_leq(a, b) for a in found for b in found if a != b)


class TestClosure:
    def test_projective_line(self):
        shape = FlagShape(2, (1,))
        one, two = parse_coset(shape, "1"), parse_coset(shape, "2")
        rel = bruhat_closure(shape)
        assert (one, two) in rel and (two, one) not in rel

    def test_identity_is_bottom(self):
        shape = parse_flag("1,2/4")
        rel = bruhat_closure(shape)
        e = identity_coset(shape)
        assert all((e, c) in rel for c in enumerate_cosets(shape))

    def test_matches_full_group_order(self):
        shape = parse_flag("1,2/4")
        rel = bruhat_closure(shape)
        cosets = list(enumerate_cosets(shape))
        assert sum(1 for u, x in itertools.product(cosets, repeat=2)
                   if ((u, x) in rel) == bruhat_leq_full(u.perm, x.perm)) == 144


class TestVerify:
    @pytest.mark.parametrize("flag, pairs", [("1,2/4", 144), ("1,2,3/4", 576), ("2/5", 100)])
    def test_clean(self, flag, pairs):
        report = verify_space(parse_flag(flag))
        assert report.summary() == f"{pairs} pairs, 0 mismatches"
        assert report.ok
        assert 0 < report.symmetric_pairs <= pairs

    def test_parallel_matches_serial(self):
        shape = parse_flag("1,3/4")
        a = verify_space(shape)
        b = verify_space(shape, jobs=2)
        assert a == b

    def test_reports_mismatch(self, monkeypatch):
        import mayadeg.oracle as oracle

        def wrong(v, w):
            total, trace = greedy_min_degree(v, w)
            return tuple(x + 1 for x in total), trace

        monkeypatch.setattr(oracle, "greedy_min_degree", wrong)
        report = verify_space(parse_flag("1/2"))
        assert not report.ok
        assert len(report.mismatches) == 4
        assert "MISMATCH" in "\n".join(report.lines())
