'''
Test cases for cycle recognition and enumeration.
'''
from unittest import TestCase

import numpy as np

from chordx.complex import SimplicialComplex, d_closure, pure_skeleton
from chordx.cycles import (certify_cycle, cone_extension, enumerate_face_minimal_cycles, is_d_dimensional_cycle,
                           kernel_supports, vertex_link_cycles)
from chordx.errors import EnumerationInfeasible, PreconditionError, PurityError
from chordx.instances import triangle_pair, octahedron, octahedron_chorded, tetrahedron


def _c(*faces: str) -> SimplicialComplex:
    return SimplicialComplex.from_labeled(faces)


class TestRecognition(TestCase):
    '''
    Tests for recognizing and certifying cycles.
    '''

    def test_is_cycle(self):
        '''
        Test simple cycles and non-cycles.
        '''
        self.assertTrue(is_d_dimensional_cycle(tetrahedron()))
        self.assertTrue(is_d_dimensional_cycle(octahedron()))
        self.assertFalse(is_d_dimensional_cycle(_c('123')))
        self.assertTrue(is_d_dimensional_cycle(_c('12', '23', '13')))
        # even incidence without path-connectedness
        self.assertFalse(is_d_dimensional_cycle(_c('12', '23', '13', '45', '56', '46')))
        self.assertRaises(PurityError, is_d_dimensional_cycle, _c('123', '4'))
        with self.assertRaises(PreconditionError) as ctx:
            is_d_dimensional_cycle(_c('1', '2'))
        self.assertEqual(ctx.exception.clause, 'dimension')

    def test_certify(self):
        '''
        Test certificates and their flags.
        '''
        cert = certify_cycle(tetrahedron())
        self.assertEqual((cert.dim, cert.face_minimal, cert.d_complete, cert.one_complete), (2, True, True, True))
        cert = certify_cycle(octahedron())
        self.assertEqual((cert.face_minimal, cert.d_complete, cert.one_complete), (True, False, False))
        self.assertEqual(cert.vertices, (0, 1, 2, 3, 4, 5))
        self.assertEqual(len(cert.faces), 8)
        with self.assertRaises(PreconditionError) as ctx:
            certify_cycle(_c('123', '124'))
        self.assertEqual(ctx.exception.clause, 'cycle')

    def test_not_face_minimal(self):
        '''
        Test that two tetrahedra sharing an edge are not face-minimal.
        '''
        cert = certify_cycle(_c('123', '124', '134', '234', '125', '126', '156', '256'))
        self.assertFalse(cert.face_minimal)

    def test_to_dict(self):
        '''
        Test the JSON form of certificates.
        '''
        self.assertEqual(certify_cycle(_c('ab', 'bc', 'ac')).to_dict(),
                         {'dimension': 1,
                          'faces': [['a', 'b'], ['a', 'c'], ['b', 'c']],
                          'flags': {'face_minimal': True, 'd_complete': True, 'one_complete': True}})


class TestEnumeration(TestCase):
    '''
    Tests for enumerating face-minimal cycles.
    '''

    def test_kernel_supports(self):
        '''
        Test minimal supports of a span.
        '''
        basis = [np.array([1, 1, 0], dtype=np.uint8), np.array([0, 1, 1], dtype=np.uint8)]
        self.assertEqual(kernel_supports(basis), [0b011, 0b101, 0b110])
        basis = [np.array([1, 1, 0, 0], dtype=np.uint8), np.array([1, 1, 1, 1], dtype=np.uint8)]
        self.assertEqual(kernel_supports(basis), [0b0011, 0b1100])
        self.assertEqual(kernel_supports([]), [])

    def test_kernel_supports_wide(self):
        '''
        Test minimal supports of vectors spanning more than one word.
        '''
        basis = [np.zeros(130, dtype=np.uint8) for _ in range(3)]
        basis[0][[0, 70]] = 1
        basis[1][[1, 71]] = 1
        basis[2][129] = 1
        self.assertEqual(kernel_supports(basis), [1 << 129, 1 | 1 << 70, 2 | 1 << 71])
        basis[1][129] = 1
        self.assertEqual(kernel_supports(basis), [1 << 129, 1 | 1 << 70, 2 | 1 << 71])

    def test_tetrahedron(self):
        '''
        Test that the tetrahedron is its only cycle.
        '''
        cycles = enumerate_face_minimal_cycles(tetrahedron(), 2)
        self.assertEqual(len(cycles), 1)
        self.assertEqual(cycles[0].cycle, tetrahedron())
        self.assertTrue(cycles[0].d_complete)

    def test_octahedron_with_chords(self):
        '''
        Test the octahedron with two chords.
        '''
        gamma = octahedron_chorded()
        cycles = enumerate_face_minimal_cycles(gamma, 2)
        self.assertEqual([len(c.faces) for c in cycles], [6, 6, 8])
        self.assertEqual(str(cycles[0]), '<123, 125, 134, 145, 235, 345>')
        self.assertEqual(str(cycles[1]), '<123, 126, 134, 146, 236, 346>')
        self.assertEqual(cycles[2].cycle, octahedron())
        self.assertTrue(all(c.face_minimal for c in cycles))

    def test_closure_of_triangle_pair(self):
        '''
        Test the nine-tetrahedra cycle.
        '''
        closure = d_closure(triangle_pair())
        cycles = enumerate_face_minimal_cycles(pure_skeleton(closure, 3), 3)
        self.assertEqual(len(cycles), 1)
        cycle = cycles[0]
        self.assertEqual(len(cycle.faces), 9)
        self.assertTrue(cycle.one_complete)
        self.assertFalse(cycle.d_complete)
        self.assertEqual(cycles, enumerate_face_minimal_cycles(closure, 3))

    def test_graph_cycles(self):
        '''
        Test the triangles and the square of a chorded square.
        '''
        cycles = enumerate_face_minimal_cycles(_c('12', '23', '34', '14', '13'), 1)
        self.assertEqual([str(c) for c in cycles], ['<12, 13, 23>', '<12, 14, 23, 34>', '<13, 14, 34>'])

    def test_no_faces(self):
        '''
        Test complexes without faces of the requested dimension.
        '''
        self.assertEqual(enumerate_face_minimal_cycles(_c('12'), 2), [])
        self.assertEqual(enumerate_face_minimal_cycles(_c('123'), 2), [])
        self.assertRaises(ValueError, enumerate_face_minimal_cycles, _c('12'), 0)

    def test_cap(self):
        '''
        Test that exceeding the kernel cap raises.
        '''
        with self.assertRaises(EnumerationInfeasible) as ctx:
            enumerate_face_minimal_cycles(octahedron_chorded(), 2, kernel_cap=1)
        self.assertEqual((ctx.exception.kernel_dim, ctx.exception.cap), (2, 1))


class TestConeExtension(TestCase):
    '''
    Tests for extending cycles by cones.
    '''

    def test_triangle(self):
        '''
        Test that coning a hollow triangle gives the tetrahedron.
        '''
        omega = certify_cycle(_c('12', '23', '13'))
        phi = cone_extension(omega, [(0, 1, 2)], 3)
        self.assertEqual(phi.dim, 2)
        self.assertEqual(phi.faces, tetrahedron().facets)
        self.assertEqual(phi.cycle.n_vertices, 4)
        self.assertTrue(phi.d_complete)

    def test_square(self):
        '''
        Test that coning a square gives a pyramid.
        '''
        omega = certify_cycle(_c('12', '23', '34', '14'))
        phi = cone_extension(omega, [(0, 1, 2), (0, 2, 3)], 4)
        self.assertEqual(phi.faces, ((0, 1, 2), (0, 1, 4), (0, 2, 3), (0, 3, 4), (1, 2, 4), (2, 3, 4)))
        self.assertTrue(phi.face_minimal)
        self.assertFalse(phi.d_complete)

    def test_preconditions(self):
        '''
        Test that violated preconditions name their clause.
        '''
        omega = certify_cycle(_c('12', '23', '34', '45', '15'))
        fan = [(0, 1, 2), (0, 2, 3), (0, 3, 4)]
        tetra = [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
        cases = [('vertex', fan, 2),
                 ('support', fan + [(0, 1, 5)], 6),
                 ('support', [(0, 1)], 6),
                 ('boundary', fan[:2], 6),
                 ('minimality', fan + tetra, 6)]
        for clause, filling, v in cases:
            with self.assertRaises(PreconditionError) as ctx:
                cone_extension(omega, filling, v)
            self.assertEqual(ctx.exception.clause, clause)
        self.assertEqual(len(cone_extension(omega, fan, 5).faces), 8)


class TestVertexLinks(TestCase):
    '''
    Tests for decomposing vertex links.
    '''

    def test_links(self):
        '''
        Test links in the tetrahedron and the octahedron.
        '''
        links = vertex_link_cycles(certify_cycle(tetrahedron()), 3)
        self.assertEqual([c.faces for c in links], [((0, 1), (0, 2), (1, 2))])
        links = vertex_link_cycles(certify_cycle(octahedron()), 4)
        self.assertEqual([c.faces for c in links], [((0, 1), (0, 3), (1, 2), (2, 3))])

    def test_nine_tetrahedra(self):
        '''
        Test that the links of the nine-tetrahedra cycle are certified cycles.
        '''
        cycle = enumerate_face_minimal_cycles(pure_skeleton(d_closure(triangle_pair()), 3), 3)[0]
        links = vertex_link_cycles(cycle, 0)
        self.assertTrue(links)
        self.assertTrue(all(link.dim == 2 for link in links))

    def test_preconditions(self):
        '''
        Test invalid vertices and dimensions.
        '''
        with self.assertRaises(PreconditionError) as ctx:
            vertex_link_cycles(certify_cycle(tetrahedron()), 7)
        self.assertEqual(ctx.exception.clause, 'vertex')
        with self.assertRaises(PreconditionError) as ctx:
            vertex_link_cycles(certify_cycle(_c('12', '23', '13')), 0)
        self.assertEqual(ctx.exception.clause, 'dimension')
