'''
Test cases for monomial ideals and their complexes.
'''
from unittest import TestCase

from chordx.complex import SimplicialComplex, d_closure, d_complement, pure_skeleton
from chordx.errors import MixedDegreeError, ParseError, UnitIdealError
from chordx.ideal import (MonomialIdeal, edge_ideal, facet_complex, facet_ideal, format_ideal, ideal_to_dict,
                          minimal_nonfaces, parse_ideal, stanley_reisner_complex, stanley_reisner_ideal)
from chordx.instances import triangle_pair, triangle_pair_ideal


def _c(*faces: str) -> SimplicialComplex:
    return SimplicialComplex.from_labeled(faces)


class TestMonomialIdeal(TestCase):
    '''
    Tests for the ideal type.
    '''

    def test_minimal_generators(self):
        '''
        Test that non-minimal generators are dropped.
        '''
        ideal = MonomialIdeal.from_generators([(0, 1, 2), (0, 1), (2, 3)])
        self.assertEqual(ideal.generators, ((0, 1), (2, 3)))
        self.assertEqual(ideal.labels, ('x0', 'x1', 'x2', 'x3'))
        self.assertEqual(str(ideal), '(x0*x1, x2*x3)')

    def test_degrees(self):
        '''
        Test generation degrees.
        '''
        self.assertEqual(triangle_pair_ideal().generation_degree, 3)
        mixed = MonomialIdeal.from_generators([(0, 1), (2, 3, 4)])
        self.assertEqual(mixed.degrees, {2, 3})
        self.assertRaises(MixedDegreeError, lambda: mixed.generation_degree)
        self.assertRaises(ValueError, lambda: MonomialIdeal.from_generators([], 3).generation_degree)

    def test_invalid(self):
        '''
        Test rejected generators.
        '''
        self.assertRaises(UnitIdealError, MonomialIdeal.from_generators, [()])
        self.assertRaises(ValueError, MonomialIdeal.from_generators, [(0, 4)], 3)

    def test_labeled(self):
        '''
        Test construction from variable names.
        '''
        ideal = MonomialIdeal.from_labeled([['a', 'b'], ['b', 'c']])
        self.assertEqual(ideal.labels, ('a', 'b', 'c'))
        self.assertEqual(ideal.generators, ((0, 1), (1, 2)))


class TestDictionaries(TestCase):
    '''
    Tests for the Stanley-Reisner and facet dictionaries.
    '''

    def test_stanley_reisner_complex(self):
        '''
        Test Stanley-Reisner complexes.
        '''
        ideal = MonomialIdeal.from_generators([(0, 1)])
        self.assertEqual(stanley_reisner_complex(ideal).facets, ((0,), (1,)))
        self.assertEqual(stanley_reisner_complex(triangle_pair_ideal()), d_closure(triangle_pair()))
        c4 = parse_ideal('x1*x2\nx2*x3\nx3*x4\nx1*x4')
        self.assertEqual(str(stanley_reisner_complex(c4)), '<{x1,x3}, {x2,x4}>')

    def test_cone_vertices(self):
        '''
        Test that variables in no generator are cone points.
        '''
        ideal = MonomialIdeal.from_generators([(0, 1)], 4)
        self.assertEqual(stanley_reisner_complex(ideal).facets, ((0, 2, 3), (1, 2, 3)))
        self.assertEqual(stanley_reisner_complex(MonomialIdeal.from_generators([], 3)).facets, ((0, 1, 2),))

    def test_minimal_nonfaces(self):
        '''
        Test minimal non-faces.
        '''
        self.assertEqual(minimal_nonfaces(d_closure(triangle_pair())), [(0, 1, 2), (3, 4, 5)])
        self.assertEqual(minimal_nonfaces(SimplicialComplex.simplex(4)), [])
        self.assertEqual(minimal_nonfaces(_c('12', '23', '13')), [(0, 1, 2)])
        self.assertEqual(minimal_nonfaces(SimplicialComplex.void(2)), [()])
        # vertices of the ground set in no face are non-faces
        self.assertEqual(minimal_nonfaces(SimplicialComplex.from_faces([(0,)], 2)), [(1,)])

    def test_stanley_reisner_ideal(self):
        '''
        Test Stanley-Reisner ideals and the round trip.
        '''
        self.assertEqual(stanley_reisner_ideal(_c('1', '2')).generators, ((0, 1),))
        self.assertRaises(UnitIdealError, stanley_reisner_ideal, SimplicialComplex.void(2))
        for ideal in (triangle_pair_ideal(), parse_ideal('x1*x2\nx2*x3\nx3*x4\nx1*x4'),
                      MonomialIdeal.from_generators([(0, 1, 2), (1, 3), (4,)], 6)):
            self.assertEqual(stanley_reisner_ideal(stanley_reisner_complex(ideal)), ideal)

    def test_facet_dictionary(self):
        '''
        Test facet complexes and facet ideals.
        '''
        ideal = MonomialIdeal.from_generators([(0, 1, 2)])
        self.assertEqual(facet_complex(ideal).facets, ((0, 1, 2),))
        self.assertEqual(facet_ideal(facet_complex(triangle_pair_ideal())), triangle_pair_ideal())

    def test_complement_bridge(self):
        '''
        Test that the complement of the facet complex is the pure skeleton of
        the Stanley-Reisner complex.
        '''
        ideal = triangle_pair_ideal()
        self.assertEqual(d_complement(facet_complex(ideal), 2), pure_skeleton(stanley_reisner_complex(ideal), 2))

    def test_edge_ideal(self):
        '''
        Test edge ideals.
        '''
        ideal = edge_ideal(_c('12', '23', '4'))
        self.assertEqual(ideal.generators, ((0, 1), (1, 2)))
        self.assertEqual(ideal.n_variables, 4)
        self.assertRaises(ValueError, edge_ideal, _c('123'))


class TestTextFormat(TestCase):
    '''
    Tests for the ideal text format.
    '''

    def test_parse(self):
        '''
        Test both monomial notations and declarations.
        '''
        self.assertEqual(parse_ideal('x0*x1*x2\nx3 x4 x5\n'), triangle_pair_ideal())
        ideal = parse_ideal('@variables a b c\n# comment\na*b\n')
        self.assertEqual(ideal.n_variables, 3)
        self.assertEqual(ideal.generators, ((0, 1),))

    def test_parse_errors(self):
        '''
        Test that parse errors carry line numbers.
        '''
        with self.assertRaises(ParseError) as ctx:
            parse_ideal('x0*x1\nx1*x1\n')
        self.assertEqual(ctx.exception.line, 2)
        with self.assertRaises(ParseError) as ctx:
            parse_ideal('@variables a\na*b\n')
        self.assertEqual(ctx.exception.line, 2)

    def test_format(self):
        '''
        Test serialization.
        '''
        ideal = triangle_pair_ideal()
        text = format_ideal(ideal)
        self.assertEqual(text, '@variables x0 x1 x2 x3 x4 x5\nx0*x1*x2\nx3*x4*x5')
        self.assertEqual(parse_ideal(text), ideal)
        self.assertEqual(ideal_to_dict(MonomialIdeal.from_generators([(0, 1)])),
                         {'variables': ['x0', 'x1'], 'generators': [['x0', 'x1']]})
