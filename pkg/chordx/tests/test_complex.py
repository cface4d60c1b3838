'''
Test cases for simplicial complexes and their calculus.
'''
from unittest import TestCase

from chordx.complex import (SimplicialComplex, complex_to_dict, d_closure, d_complement, face_mask, faces_of_dim,
                            format_complex, induced_subcomplex, is_d_complete, mask_face, maximal_masks,
                            parse_complex, path_components, pure_skeleton)
from chordx.errors import EmptySkeletonError, ParseError, PurityError
from chordx.instances import triangle_pair, tetra_fan, tetra_fan_closure, octahedron, tetrahedron


def _c(*faces: str) -> SimplicialComplex:
    return SimplicialComplex.from_labeled(faces)


def _ids(complex_: SimplicialComplex, labels: str):
    return [complex_.labels.index(v) for v in labels]


def _labeled(complex_: SimplicialComplex, faces):
    return [complex_.label(f) for f in faces]


class TestFaces(TestCase):
    '''
    Tests for bitmask helpers.
    '''

    def test_masks(self):
        '''
        Test conversion between faces and bitmasks.
        '''
        self.assertEqual(face_mask((0, 2, 5)), 0b100101)
        self.assertEqual(mask_face(0b100101), (0, 2, 5))
        self.assertEqual(mask_face(0), ())
        self.assertEqual(sorted(maximal_masks([0b011, 0b001, 0b110, 0b011])), [0b011, 0b110])


class TestSimplicialComplex(TestCase):
    '''
    Tests for the complex type.
    '''

    def test_antichain(self):
        '''
        Test that faces contained in other faces are dropped.
        '''
        gamma = SimplicialComplex.from_faces([(0, 1), (0, 1, 2), (2, 3), (3,)])
        self.assertEqual(gamma.facets, ((0, 1, 2), (2, 3)))
        self.assertEqual(gamma.dim, 2)
        self.assertFalse(gamma.is_pure)
        self.assertEqual(gamma.vertices, (0, 1, 2, 3))

    def test_void_and_empty(self):
        '''
        Test that the void complex and `{∅}` differ.
        '''
        void = SimplicialComplex.void(3)
        empty = SimplicialComplex.from_faces([()], 3)
        self.assertNotEqual(void, empty)
        self.assertTrue(void.is_void)
        self.assertFalse(empty.is_void)
        self.assertEqual(void.dim, -2)
        self.assertEqual(empty.dim, -1)
        self.assertTrue(empty.has_face(()))
        self.assertFalse(void.has_face(()))
        self.assertEqual(str(empty), '<{}>')

    def test_invalid(self):
        '''
        Test rejected inputs.
        '''
        self.assertRaises(ValueError, SimplicialComplex.from_faces, [(0, 0)])
        self.assertRaises(ValueError, SimplicialComplex.from_faces, [(0, 3)], 2)
        self.assertRaises(ValueError, SimplicialComplex.from_faces, [(0, 1)], 2, ['a', 'a'])

    def test_labels(self):
        '''
        Test natural label order and face display.
        '''
        gamma = SimplicialComplex.from_labeled([['x10', 'x2'], ['x1']])
        self.assertEqual(gamma.labels, ('x1', 'x2', 'x10'))
        self.assertEqual(str(gamma), '<{x1}, {x2,x10}>')
        self.assertEqual(str(_c('abc', 'cd')), '<abc, cd>')

    def test_simplex(self):
        '''
        Test the full simplex.
        '''
        simplex = SimplicialComplex.simplex(4)
        self.assertEqual(simplex.facets, ((0, 1, 2, 3),))
        self.assertTrue(simplex.has_face((1, 3)))
        self.assertTrue(simplex.has_mask(0b1111))


class TestCalculus(TestCase):
    '''
    Tests for skeletons, complements, closures, and induced subcomplexes.
    '''

    def test_faces_of_dim(self):
        '''
        Test enumerating faces of a dimension.
        '''
        gamma = _c('123')
        self.assertEqual(_labeled(gamma, faces_of_dim(gamma, 1)), ['12', '13', '23'])
        gamma = _c('123', '34')
        self.assertEqual(_labeled(gamma, faces_of_dim(gamma, 0)), ['1', '2', '3', '4'])
        self.assertEqual(faces_of_dim(gamma, 3), ())
        self.assertEqual(faces_of_dim(gamma, -1), ((),))
        self.assertEqual(len(faces_of_dim(triangle_pair(), 2)), 18)

    def test_pure_skeleton(self):
        '''
        Test pure skeletons.
        '''
        self.assertEqual(pure_skeleton(_c('1234'), 2), tetrahedron())
        skeleton = pure_skeleton(tetra_fan_closure(), 2)
        self.assertEqual(str(skeleton), '<abc, abd, acd, bcd, bce, cde>')
        self.assertEqual(str(pure_skeleton(_c('12', '34'), 0)), '<1, 2, 3, 4>')
        self.assertRaises(EmptySkeletonError, pure_skeleton, _c('12'), 2)

    def test_d_complement(self):
        '''
        Test complements.
        '''
        self.assertTrue(d_complement(pure_skeleton(SimplicialComplex.simplex(4), 2), 2).is_void)
        self.assertEqual(d_complement(triangle_pair(), 2).facets, ((0, 1, 2), (3, 4, 5)))
        self.assertEqual(str(d_complement(_c('12', '23'), 1)), '<13>')

    def test_induced_subcomplex(self):
        '''
        Test induced subcomplexes.
        '''
        gamma = _c('123', '34')
        self.assertEqual(str(induced_subcomplex(gamma, _ids(gamma, '123'))), '<123>')
        self.assertEqual(str(induced_subcomplex(gamma, _ids(gamma, '14'))), '<1, 4>')
        octa = octahedron()
        self.assertEqual(str(induced_subcomplex(octa, _ids(octa, '1234'))), '<12, 14, 23, 34>')
        self.assertEqual(induced_subcomplex(gamma, gamma.vertices), gamma)
        self.assertEqual(induced_subcomplex(gamma, []).facets, ((),))
        self.assertRaises(ValueError, induced_subcomplex, gamma, [7])

    def test_d_closure(self):
        '''
        Test closures.
        '''
        self.assertEqual(d_closure(tetra_fan()), tetra_fan_closure())
        self.assertEqual(d_closure(_c('12', '23', '13')), _c('123'))
        closure = d_closure(triangle_pair())
        self.assertEqual(len(faces_of_dim(closure, 3)), 9)
        self.assertEqual(faces_of_dim(closure, 4), ())
        self.assertEqual(faces_of_dim(closure, 2), faces_of_dim(triangle_pair(), 2))
        self.assertRaises(PurityError, d_closure, _c('123', '4'))

    def test_d_closure_explicit_dim(self):
        '''
        Test closures of complexes without `d`-faces.
        '''
        closure = d_closure(SimplicialComplex.void(3), 1)
        self.assertEqual(closure.facets, ((0,), (1,), (2,)))
        self.assertEqual(d_closure(SimplicialComplex.void(3), 0).facets, ((),))
        self.assertRaises(PurityError, d_closure, _c('12'), 2)

    def test_path_components(self):
        '''
        Test splitting into path-connected components.
        '''
        self.assertEqual(len(path_components(_c('abc', 'bcd'))), 1)
        self.assertEqual([str(p) for p in path_components(_c('abc', 'cde'))], ['<abc>', '<cde>'])
        self.assertEqual(len(path_components(tetrahedron())), 1)
        self.assertRaises(PurityError, path_components, _c('abc', 'd'))

    def test_is_d_complete(self):
        '''
        Test completeness.
        '''
        self.assertTrue(is_d_complete(tetrahedron(), 2))
        self.assertFalse(is_d_complete(octahedron(), 2))
        self.assertTrue(is_d_complete(octahedron(), 0))
        octa = octahedron()
        self.assertTrue(is_d_complete(octa, 1, _ids(octa, '125')))


class TestTextFormat(TestCase):
    '''
    Tests for the complex text format.
    '''

    def test_parse(self):
        '''
        Test parsing with comments and declarations.
        '''
        gamma = parse_complex('# octahedron cap\n1 2 5\n\n2 3 5\n')
        self.assertEqual(str(gamma), '<125, 235>')
        gamma = parse_complex('@vertices c b a\na b\n')
        self.assertEqual(gamma.labels, ('c', 'b', 'a'))
        self.assertEqual(gamma.facets, ((1, 2),))
        self.assertEqual(parse_complex('{}').facets, ((),))
        self.assertTrue(parse_complex('# nothing').is_void)

    def test_parse_errors(self):
        '''
        Test that parse errors carry line numbers.
        '''
        with self.assertRaises(ParseError) as ctx:
            parse_complex('1 2\n1 1\n')
        self.assertEqual(ctx.exception.line, 2)
        with self.assertRaises(ParseError) as ctx:
            parse_complex('@vertices a b\na c\n')
        self.assertEqual(ctx.exception.line, 2)
        with self.assertRaises(ParseError) as ctx:
            parse_complex('@faces a\n')
        self.assertEqual(ctx.exception.line, 1)

    def test_format(self):
        '''
        Test canonical serialization.
        '''
        gamma = tetra_fan_closure()
        text = format_complex(gamma)
        self.assertEqual(text, '@vertices a b c d e\na b c d\na e\nb c e\nc d e')
        self.assertEqual(parse_complex(text), gamma)
        self.assertEqual(complex_to_dict(_c('ab')), {'vertices': ['a', 'b'], 'facets': [['a', 'b']]})
