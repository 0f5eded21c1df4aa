"""The main face system, Heawood vectors, and the coloring correspondence."""

import numpy as np
import pytest

from heawood import (
    ContractionError,
    EmbeddedCubicGraph,
    HeawoodVector,
    ImproperColoringError,
    InvalidGraphError,
    NotAHeawoodVectorError,
    NotBipartiteError,
    TaitColoring,
    bipartite_heawood_vector,
    build_main_sle,
    circular_ladder,
    contract_triangle,
    count_tait_colorings_heawood,
    edges,
    enumerate_heawood_vectors,
    enumerate_tait_oracle,
    heawood_to_tait,
    is_bipartite,
    is_proper_coloring,
    k4,
    sle_rank,
    tait_to_heawood,
    trace_faces,
    validate,
)
from heawood import gf3

from conftest import CL3_PAPER, CL3_PAPER_TO_GENERATOR, DUMBBELL, kernel_scan

GOLDEN_CL3_VECTORS = ((1, 1, 1, 2, 2, 2), (2, 2, 2, 1, 1, 1))


class TestBuildMainSle:
    def test_cl3_golden_matrix(self):
        system = build_main_sle(CL3_PAPER)
        assert system.dropped_face.vertex_set == frozenset({0, 1, 3, 5})
        assert system.matrix.shape == (4, 6)
        # Rows follow face-trace order with the outer quad dropped.
        assert [system.faces[i].vertex_cycle for i in system.row_face_ids] == [
            (0, 2, 4, 5),
            (0, 1, 2),
            (1, 3, 4, 2),
            (3, 5, 4),
        ]
        assert system.matrix.tolist() == [
            [1, 0, 1, 0, 1, 1],
            [1, 1, 1, 0, 0, 0],
            [0, 1, 1, 1, 1, 0],
            [0, 0, 0, 1, 1, 1],
        ]

    def test_triangle_row_has_exactly_its_vertices(self):
        system = build_main_sle(CL3_PAPER)
        triangle = next(f for f in system.faces if f.vertex_set == frozenset({0, 1, 2}))
        row = system.row_of_face(triangle.face_id)
        assert list(np.nonzero(system.matrix[row])[0]) == [0, 1, 2]

    def test_k4_rows_have_three_ones(self):
        system = build_main_sle(k4())
        assert system.matrix.shape == (3, 4)
        assert (system.matrix.sum(axis=1) == 3).all()

    def test_cl4_shape(self):
        assert build_main_sle(circular_ladder(4)).matrix.shape == (5, 8)

    def test_default_drop_without_hint_is_smallest_cycle(self):
        g = EmbeddedCubicGraph(CL3_PAPER.rotations)  # no hint
        system = build_main_sle(g)
        assert system.dropped_face.vertex_cycle == (0, 1, 2)

    def test_dropped_row_is_negated_sum_of_kept_rows(self):
        for g in (CL3_PAPER, k4(), circular_ladder(4), circular_ladder(5)):
            system = build_main_sle(g)
            dropped_row = np.zeros(g.n_vertices, dtype=np.int64)
            dropped_row[list(system.dropped_face.vertex_cycle)] = 1
            total = (system.matrix.astype(np.int64).sum(axis=0) + dropped_row) % 3
            assert (total == 0).all()

    def test_invalid_graph_rejected(self):
        with pytest.raises(InvalidGraphError):
            build_main_sle(DUMBBELL)

    def test_explicit_drop_out_of_range(self):
        with pytest.raises(ValueError):
            build_main_sle(CL3_PAPER, drop_face_id=7)


class TestRank:
    def test_golden_ranks(self):
        assert sle_rank(CL3_PAPER) == 4
        assert sle_rank(circular_ladder(4)) == 4
        assert sle_rank(k4()) == 3

    @pytest.mark.parametrize("g", [CL3_PAPER, k4(), circular_ladder(4), circular_ladder(5)])
    def test_rank_independent_of_dropped_face(self, g):
        baseline = sle_rank(g)
        for face in trace_faces(g):
            assert sle_rank(g, drop_face_id=face.face_id) == baseline


class TestEnumerate:
    def test_cl3_paper_golden_vectors(self):
        vectors = enumerate_heawood_vectors(CL3_PAPER)
        assert tuple(v.spins for v in vectors) == GOLDEN_CL3_VECTORS
        assert vectors[0].signs == (1, 1, 1, -1, -1, -1)

    def test_generator_cl3_matches_figure_under_label_map(self):
        vectors = enumerate_heawood_vectors(circular_ladder(3))
        perm = CL3_PAPER_TO_GENERATOR
        expected = set()
        for spins in GOLDEN_CL3_VECTORS:
            mapped = [0] * 6
            for paper_v, spin in enumerate(spins):
                mapped[perm[paper_v]] = spin
            expected.add(tuple(mapped))
        assert {v.spins for v in vectors} == expected

    def test_cl4_counts_and_paired_vectors(self):
        vectors = enumerate_heawood_vectors(circular_ladder(4))
        assert len(vectors) == 8  # (2**4 + 2) / 3 + 2
        spins = {v.spins for v in vectors}
        assert (1, 2, 1, 2, 1, 2, 1, 2) in spins  # rim spin equals its hub spin
        assert (2, 1, 2, 1, 2, 1, 2, 1) in spins

    def test_k4_constant_vectors(self):
        assert {v.spins for v in enumerate_heawood_vectors(k4())} == {
            (1, 1, 1, 1),
            (2, 2, 2, 2),
        }

    @pytest.mark.parametrize("g", [CL3_PAPER, k4(), circular_ladder(4), circular_ladder(5)])
    def test_vectors_satisfy_every_face_including_dropped(self, g):
        faces = trace_faces(g)
        for vec in enumerate_heawood_vectors(g):
            for face in faces:
                assert sum(vec.spins[v] for v in face.vertex_cycle) % 3 == 0

    @pytest.mark.parametrize("g", [CL3_PAPER, k4(), circular_ladder(4), circular_ladder(5)])
    def test_negation_closure_and_canonical_order(self, g):
        vectors = enumerate_heawood_vectors(g)
        spins = [v.spins for v in vectors]
        assert spins == sorted(spins)
        assert {v.negated().spins for v in vectors} == set(spins)

    @pytest.mark.parametrize("g", [CL3_PAPER, k4(), circular_ladder(4)])
    def test_agrees_with_full_scan(self, g):
        scanned = kernel_scan(build_main_sle(g).matrix, nonzero_only=True)
        assert {v.spins for v in enumerate_heawood_vectors(g)} == scanned

    def test_cl3_kernel_is_two_dimensional(self):
        system = build_main_sle(CL3_PAPER)
        assert len(kernel_scan(system.matrix)) == 9  # 3**2
        assert len(gf3.nullspace_basis(system.matrix)) == 2

    def test_cl3_free_assignments_that_survive(self):
        # Of the four sign patterns on the two free columns, exactly the
        # constant ones back-substitute to everywhere-nonzero vectors.
        solution = gf3.solve_parametric(build_main_sle(CL3_PAPER).matrix)
        assert solution.free_cols == (4, 5)
        survivors = {
            pattern
            for pattern in [(1, 1), (1, 2), (2, 1), (2, 2)]
            if (solution.substitute(pattern) != 0).all()
        }
        assert survivors == {(1, 1), (2, 2)}

    def test_counts(self):
        assert count_tait_colorings_heawood(CL3_PAPER) == 6
        assert count_tait_colorings_heawood(circular_ladder(4)) == 24
        assert count_tait_colorings_heawood(k4()) == 6


class TestHeawoodVectorType:
    def test_rejects_zero_spin(self):
        with pytest.raises(ValueError):
            HeawoodVector((1, 0, 2))

    def test_signs_and_negation(self):
        vec = HeawoodVector((1, 2))
        assert vec.signs == (1, -1)
        assert vec.negated().spins == (2, 1)


class TestColoringCorrespondence:
    def test_seed_propagates_to_all_edges(self):
        vec = HeawoodVector(GOLDEN_CL3_VECTORS[0])
        coloring = heawood_to_tait(CL3_PAPER, vec, (0, 1), 0)
        assert len(coloring.colors) == 9
        assert is_proper_coloring(CL3_PAPER, coloring)
        assert coloring.colors[edges(CL3_PAPER).index((0, 1))] == 0

    def test_three_seeds_give_cyclic_shifts(self):
        vec = HeawoodVector(GOLDEN_CL3_VECTORS[0])
        c0 = heawood_to_tait(CL3_PAPER, vec, (0, 1), 0)
        c1 = heawood_to_tait(CL3_PAPER, vec, (0, 1), 1)
        c2 = heawood_to_tait(CL3_PAPER, vec, (0, 1), 2)
        assert c1 == c0.shifted(1)
        assert c2 == c0.shifted(2)

    @pytest.mark.parametrize("g", [CL3_PAPER, k4(), circular_ladder(4)])
    def test_roundtrip_from_vector(self, g):
        e0 = edges(g)[0]
        for vec in enumerate_heawood_vectors(g):
            for color in (0, 1, 2):
                coloring = heawood_to_tait(g, vec, e0, color)
                assert is_proper_coloring(g, coloring)
                assert tait_to_heawood(g, coloring) == vec

    @pytest.mark.parametrize("g", [CL3_PAPER, k4(), circular_ladder(4)])
    def test_roundtrip_from_coloring(self, g):
        e0 = edges(g)[0]
        slot = edges(g).index(e0)
        for coloring in enumerate_tait_oracle(g, limit=100):
            vec = tait_to_heawood(g, coloring)
            assert heawood_to_tait(g, vec, e0, coloring.colors[slot]) == coloring

    def test_k4_color_swap_changes_vector(self):
        # Swapping two colors globally is not a cyclic shift, so the two
        # colorings generally read off different spin vectors.
        colorings = enumerate_tait_oracle(k4(), limit=10)
        by_vector = {}
        for coloring in colorings:
            by_vector.setdefault(tait_to_heawood(k4(), coloring).spins, []).append(coloring)
        assert len(by_vector) == 2
        swap = {0: 1, 1: 0, 2: 2}
        some = colorings[0]
        swapped = TaitColoring(tuple(swap[c] for c in some.colors))
        assert tait_to_heawood(k4(), swapped) != tait_to_heawood(k4(), some)

    def test_non_vector_propagation_conflict(self):
        bad = HeawoodVector((1, 1, 1, 2, 2, 1))  # violates several faces
        with pytest.raises(NotAHeawoodVectorError):
            heawood_to_tait(CL3_PAPER, bad, (0, 1), 0)

    def test_unknown_seed_edge(self):
        vec = HeawoodVector(GOLDEN_CL3_VECTORS[0])
        with pytest.raises(ValueError):
            heawood_to_tait(CL3_PAPER, vec, (0, 4), 0)

    def test_bad_seed_color(self):
        vec = HeawoodVector(GOLDEN_CL3_VECTORS[0])
        with pytest.raises(ValueError):
            heawood_to_tait(CL3_PAPER, vec, (0, 1), 3)

    def test_improper_coloring_rejected(self):
        improper = TaitColoring((0,) * 9)
        with pytest.raises(ImproperColoringError):
            tait_to_heawood(CL3_PAPER, improper)


class TestBipartiteVector:
    def test_cl4_construction(self):
        g = circular_ladder(4)
        vec = bipartite_heawood_vector(g)
        parts = is_bipartite(g)
        assert all(vec.spins[v] == 1 for v in parts.part_a)
        assert all(vec.spins[v] == 2 for v in parts.part_b)
        assert vec in enumerate_heawood_vectors(g)

    def test_cl6_construction(self):
        g = circular_ladder(6)
        vec = bipartite_heawood_vector(g)
        for face in trace_faces(g):
            assert sum(vec.spins[v] for v in face.vertex_cycle) % 3 == 0

    def test_cl3_rejected(self):
        with pytest.raises(NotBipartiteError):
            bipartite_heawood_vector(CL3_PAPER)


class TestContractTriangle:
    def test_cl3_contracts_to_k4(self):
        faces = trace_faces(CL3_PAPER)
        triangle = next(f for f in faces if f.vertex_set == frozenset({0, 1, 2}))
        contracted = contract_triangle(CL3_PAPER, triangle.face_id)
        report = validate(contracted)
        assert report.ok
        assert report.n_vertices == 4
        assert report.n_faces == 4
        # K4: every pair adjacent.
        assert edges(contracted) == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))

    def test_spin_correspondence(self):
        faces = trace_faces(CL3_PAPER)
        triangle = next(f for f in faces if f.vertex_set == frozenset({0, 1, 2}))
        contracted = contract_triangle(CL3_PAPER, triangle.face_id)
        survivors = [v for v in range(6) if v not in triangle.vertex_set]
        expected = set()
        for vec in enumerate_heawood_vectors(CL3_PAPER):
            triangle_spins = {vec.spins[v] for v in triangle.vertex_cycle}
            assert len(triangle_spins) == 1  # constant on a proper triangle
            s = triangle_spins.pop()
            expected.add(tuple(vec.spins[v] for v in survivors) + (3 - s,))
        assert {v.spins for v in enumerate_heawood_vectors(contracted)} == expected

    def test_other_triangle_also_contracts(self):
        faces = trace_faces(CL3_PAPER)
        triangle = next(f for f in faces if f.vertex_set == frozenset({3, 4, 5}))
        contracted = contract_triangle(CL3_PAPER, triangle.face_id)
        assert validate(contracted).ok

    def test_k4_contraction_creates_parallel_edges(self):
        faces = trace_faces(k4())
        with pytest.raises(ContractionError):
            contract_triangle(k4(), faces[0].face_id)

    def test_quadrilateral_face_rejected(self):
        faces = trace_faces(circular_ladder(4))
        with pytest.raises(ContractionError):
            contract_triangle(circular_ladder(4), faces[0].face_id)
