'''
This module implements the `chordx` command line application.

The commands read complexes and ideals in their text formats or use the
built-in examples, and print either text or JSON reports. Every JSON report
embeds the configuration of the run.

Exit codes are `0` if the ideal is linear or all claims hold, `1` if it is not
or a claim failed, `2` if a combinatorial criterion stayed inconclusive, `64`
for usage and input errors, and `70` if the criteria disagree.
'''

from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple
from argparse import ArgumentParser, Namespace
from collections import Counter
from concurrent.futures import Executor, ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
import json
import logging
import sys

from .chordality import (Mode, SearchCaps, SearchStatus, Verdict, find_chord_set_exact, graph_complement, is_chorded,
                         is_d_chorded, verify_chord_set)
from .complex import (SimplicialComplex, complex_to_dict, d_closure, d_complement, format_complex, parse_complex,
                      pure_skeleton)
from .cycles import enumerate_face_minimal_cycles
from .errors import ChordxError, InfeasibleError
from .homology import reduced_homology, reduced_homology_dim
from .ideal import MonomialIdeal, edge_ideal, format_ideal, parse_ideal, stanley_reisner_complex, stanley_reisner_ideal
from .instances import (ALIASES, BUILTIN, all_graphs, octahedron, octahedron_chorded, random_graph, random_ideal,
                        rng_from_seed, rp2, tetra_fan, tetra_fan_closure, triangle_pair, triangle_pair_ideal)
from .resolution import SWEEP_LIMIT, betti_table, criterion_report, froeberg_crosscheck, has_linear_resolution

__all__ = ['EXIT_INCONCLUSIVE', 'EXIT_INTERNAL', 'EXIT_NO', 'EXIT_USAGE', 'EXIT_YES', 'RunConfig', 'main']

log = logging.getLogger(__name__)

EXIT_YES = 0
EXIT_NO = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64
EXIT_INTERNAL = 70

EXHAUSTIVE_LIMIT = 7
'''
The largest number of vertices for which all graphs are enumerated.
'''


@dataclass(frozen=True)
class RunConfig:
    '''
    The configuration of a command line run.
    '''
    command: str
    inputs: Tuple[str, ...] = ()
    mode: Mode = Mode.BOUNDARY
    caps: SearchCaps = SearchCaps()
    seed: int = 0
    as_json: bool = False
    threads: int = 1
    sweep_limit: int = SWEEP_LIMIT

    @classmethod
    def from_args(cls, args: Namespace) -> 'RunConfig':
        '''
        Build the configuration from parsed command line arguments.
        '''
        inputs = getattr(args, 'inputs', None) or [getattr(args, 'name', args.command)]
        inputs = tuple(str(x) for x in inputs)
        caps = SearchCaps(args.kernel_cap, args.chord_cap, args.family_cap, args.widen)
        return cls(args.command, inputs, Mode(args.mode), caps, args.seed & (2 ** 64 - 1), args.json,
                   args.threads, args.sweep_limit)

    def to_dict(self) -> dict:
        '''
        Convert the configuration into a JSON-compatible dictionary.
        '''
        return {'command': self.command, 'inputs': list(self.inputs), 'mode': self.mode.value,
                'caps': self.caps.to_dict(), 'seed': self.seed, 'output': 'json' if self.as_json else 'text',
                'threads': self.threads, 'sweep_limit': self.sweep_limit}


@contextmanager
def _executor(config: RunConfig):
    if config.threads <= 1:
        yield None
        return
    with ProcessPoolExecutor(max_workers=config.threads) as executor:
        yield executor


def _read_text(path: str) -> str:
    if path == '-':
        return sys.stdin.read()
    return Path(path).read_text(encoding='utf-8')


def _builtin_name(source: str) -> Optional[str]:
    name = ALIASES.get(source, source)
    if name in BUILTIN and not Path(source).exists():
        return name
    return None


def _read_complex(source: str) -> SimplicialComplex:
    name = _builtin_name(source)
    if name is not None:
        return BUILTIN[name]()
    return parse_complex(_read_text(source))


def _read_ideal(source: str) -> MonomialIdeal:
    name = _builtin_name(source)
    if name == 'triangle_pair':
        return triangle_pair_ideal()
    if name is not None:
        return stanley_reisner_ideal(BUILTIN[name]())
    return parse_ideal(_read_text(source))


def _emit(config: RunConfig, result: Dict[str, Any], text: str):
    if config.as_json:
        print(json.dumps({'config': config.to_dict(), 'result': result}, sort_keys=True, indent=2))
    else:
        print(text)


# ------------------------------------------------------------------------------


def _check_command(config: RunConfig, args: Namespace) -> int:
    ideal = _read_ideal(args.inputs[0])
    with _executor(config) as executor:
        report = criterion_report(ideal, config.mode, config.caps, config.sweep_limit, executor)
    _emit(config, report.to_dict(), report.format())
    if not report.agreement:
        log.error('criteria disagree on %s: %s', ideal, ', '.join(report.disagreements))
        return EXIT_INTERNAL
    if not report.conclusive:
        return EXIT_INCONCLUSIVE
    return EXIT_YES if report.linear else EXIT_NO


def _claims_triangle_pair(config: RunConfig) -> List[Tuple[str, bool]]:
    gamma = triangle_pair()
    closure = d_closure(gamma)
    chorded = is_chorded(closure, config.mode, config.caps)
    cycles = enumerate_face_minimal_cycles(pure_skeleton(closure, 3), 3, config.caps.kernel_cap)
    claims = [('the complex is 2-chorded', is_d_chorded(gamma, config.mode, config.caps).verdict is Verdict.YES),
              ('its 2-closure is not chorded', chorded.verdict is Verdict.NO),
              ('the 3-skeleton of the closure is the failing skeleton',
               chorded.failing is not None and chorded.failing.dim == 3),
              ('the 2-closure has a one-dimensional third reduced homology group',
               reduced_homology_dim(closure, 3) == 1),
              ('the 2-closure is the Stanley-Reisner complex of the ideal',
               stanley_reisner_complex(triangle_pair_ideal()) == closure),
              ('the ideal has no linear resolution',
               not has_linear_resolution(triangle_pair_ideal(), config.sweep_limit)),
              ('the 3-skeleton holds exactly one face-minimal cycle of 9 tetrahedra',
               len(cycles) == 1 and len(cycles[0].faces) == 9)]
    if len(cycles) == 1:
        cycle = cycles[0]
        search = find_chord_set_exact(pure_skeleton(closure, 3), cycle, config.caps)
        claims.append(('the cycle is 1-complete and not 3-complete', cycle.one_complete and not cycle.d_complete))
        claims.append(('the cycle has no chord set', search.status is SearchStatus.EXHAUSTED))
    return claims


def _claims_rp2(config: RunConfig) -> List[Tuple[str, bool]]:
    gamma = rp2()
    dims = reduced_homology(gamma)
    result = has_linear_resolution(stanley_reisner_ideal(gamma), config.sweep_limit)
    witness = result.witness
    return [('the first reduced homology group is one-dimensional', dims[2] == 1),
            ('the second reduced homology group is one-dimensional', dims[3] == 1),
            ('the Stanley-Reisner ideal has no linear resolution over GF(2)', not result.linear),
            ('the witness is the full vertex set in dimension 2',
             witness is not None and witness.subset == gamma.vertices and witness.index == 2)]


def _claims_tetra_fan(config: RunConfig) -> List[Tuple[str, bool]]:
    return [('the 2-closure is <abcd, bce, cde, ae>', d_closure(tetra_fan(), 2) == tetra_fan_closure())]


def _claims_octa(config: RunConfig) -> List[Tuple[str, bool]]:
    gamma = octahedron_chorded()
    search = find_chord_set_exact(gamma, octahedron(), config.caps)
    claims = [('a chord set of the octahedron is found', search.status is SearchStatus.FOUND)]
    if search.certificate is not None:
        cert = search.certificate
        verified = verify_chord_set(gamma, cert.cycle, cert.chords, cert.parts)
        claims.append(('the chord-set certificate verifies', verified == cert))
        claims.append(('the chords split the octahedron into two pyramids',
                       len(cert.parts) == 2 and all(len(p.facets) == 6 for p in cert.parts)))
    return claims


_REPRO: Dict[str, Callable[[RunConfig], List[Tuple[str, bool]]]] = {
    'triangle_pair': _claims_triangle_pair,
    'rp2': _claims_rp2,
    'tetra_fan': _claims_tetra_fan,
    'octa': _claims_octa}


def _repro_command(config: RunConfig, args: Namespace) -> int:
    claims = _REPRO[ALIASES.get(args.name, args.name)](config)
    text = '\n'.join(f'[{"ok" if held else "FAILED"}] {claim}' for claim, held in claims)
    _emit(config, {'name': args.name, 'claims': [{'claim': c, 'holds': h} for c, h in claims]}, text)
    return EXIT_YES if all(h for _, h in claims) else EXIT_NO


def _graph_task(graph: SimplicialComplex, mode: Mode, caps: SearchCaps, limit: int) -> dict:
    record = froeberg_crosscheck(graph, limit, True, mode, caps).to_dict()
    record['ideal'] = format_ideal(edge_ideal(graph_complement(graph)))
    return record


def _ideal_task(ideal: MonomialIdeal, mode: Mode, caps: SearchCaps, limit: int) -> dict:
    linear = has_linear_resolution(ideal, limit)
    verdict = is_chorded(stanley_reisner_complex(ideal), mode, caps).verdict
    expected = Verdict.YES if linear else Verdict.NO
    if verdict not in (expected, Verdict.INCONCLUSIVE) and mode is Mode.BOUNDARY:
        log.warning('boundary mode disagrees on %s, rerunning exactly', ideal)
        verdict = is_chorded(stanley_reisner_complex(ideal), Mode.EXACT, caps).verdict
    return {'ideal': format_ideal(ideal), 'linear': linear.linear, 'chorded': verdict.value,
            'agrees': verdict in (expected, Verdict.INCONCLUSIVE)}


def _run_tasks(executor: Optional[Executor], func: Callable[..., dict], tasks: Sequence[tuple]) -> List[dict]:
    if executor is None:
        return [func(*task) for task in tasks]
    return list(executor.map(func, *zip(*tasks))) if tasks else []


def _crosscheck_command(config: RunConfig, args: Namespace) -> int:
    n = args.n_max
    if n > config.sweep_limit:
        raise InfeasibleError(f'{n} vertices exceed the sweep limit of {config.sweep_limit}')
    rng = rng_from_seed(config.seed)
    if args.kind == 'graphs':
        if args.sample is None:
            if n > EXHAUSTIVE_LIMIT:
                raise InfeasibleError(f'exhaustive enumeration is limited to {EXHAUSTIVE_LIMIT} vertices')
            graphs = list(all_graphs(n))
        else:
            graphs = [random_graph(rng, n) for _ in range(args.sample)]
        tasks: List[tuple] = [(g, config.mode, config.caps, config.sweep_limit) for g in graphs]
        func: Callable[..., dict] = _graph_task
    else:
        degrees = args.degrees or [1, 2, 3]
        if any(not 0 <= d < n for d in degrees):
            raise ValueError(f'degrees must satisfy 0 <= d < {n}')
        sample = 500 if args.sample is None else args.sample
        tasks = [(random_ideal(rng, n, degrees[int(rng.integers(len(degrees)))]), config.mode, config.caps,
                  config.sweep_limit) for _ in range(sample)]
        func = _ideal_task
    with _executor(config) as executor:
        records = _run_tasks(executor, func, tasks)

    failures = [r for r in records if not r['agrees']]
    chorded = Counter(r['chorded'] for r in records)
    inconclusive = chorded[Verdict.INCONCLUSIVE.value]
    summary = {'kind': args.kind, 'vertices': n, 'instances': len(records), 'agreements': len(records) - len(failures),
               'inconclusive': inconclusive, 'chorded': dict(sorted(chorded.items())),
               'counterexamples': failures}
    lines = [f'{args.kind} on {n} vertices: {len(records)} instances, {len(records) - len(failures)} agree'
             + (f', {inconclusive} inconclusive' if inconclusive else '')]
    for record in failures:
        lines.append('# counterexample')
        lines.append(record['ideal'])
    _emit(config, summary, '\n'.join(lines))
    log.info('crosscheck: %d of %d agree', len(records) - len(failures), len(records))
    return EXIT_YES if not failures else EXIT_NO


def _homology_command(config: RunConfig, args: Namespace) -> int:
    complex_ = _read_complex(args.inputs[0])
    dims = reduced_homology(complex_)
    text = '\n'.join(f'H~_{i} = {dim}' for i, dim in enumerate(dims, -1)) or 'void complex'
    _emit(config, {'complex': complex_to_dict(complex_), 'reduced_homology': dims}, text)
    return EXIT_YES


def _cycles_command(config: RunConfig, args: Namespace) -> int:
    complex_ = _read_complex(args.inputs[0])
    cycles = enumerate_face_minimal_cycles(complex_, args.dim, config.caps.kernel_cap)
    lines = [f'{len(cycles)} face-minimal {args.dim}-dimensional cycles']
    for cycle in cycles:
        flags = [name for name, value in (('d-complete', cycle.d_complete), ('1-complete', cycle.one_complete))
                 if value]
        lines.append(f'{cycle} {" ".join(flags)}'.rstrip())
    _emit(config, {'dimension': args.dim, 'cycles': [c.to_dict() for c in cycles]}, '\n'.join(lines))
    return EXIT_YES


def _closure_command(config: RunConfig, args: Namespace) -> int:
    complex_ = _read_complex(args.inputs[0])
    if args.op == 'closure':
        result = d_closure(pure_skeleton(complex_, args.dim), args.dim)
    elif args.op == 'skeleton':
        result = pure_skeleton(complex_, args.dim)
    else:
        result = d_complement(complex_, args.dim)
    _emit(config, {'operation': args.op, 'dimension': args.dim, 'complex': complex_to_dict(result)},
          format_complex(result))
    return EXIT_YES


def _betti_command(config: RunConfig, args: Namespace) -> int:
    ideal = _read_ideal(args.inputs[0])
    with _executor(config) as executor:
        table = betti_table(ideal, config.sweep_limit, executor)
    _emit(config, table.to_dict(), table.format())
    return EXIT_YES if table.is_linear() else EXIT_NO


def _non_negative(value: str) -> int:
    result = int(value)
    if result < 0:
        raise ValueError(value)
    return result


def _parser() -> ArgumentParser:
    parser = ArgumentParser(prog='chordx', description='Decide linear resolutions of square-free monomial ideals '
                                                       'over GF(2) via homology and chordality.')
    parser.add_argument('--mode', choices=[m.value for m in Mode], default=Mode.BOUNDARY.value,
                        help='how chord sets are established')
    parser.add_argument('--kernel-cap', type=_non_negative, default=SearchCaps.kernel_cap,
                        help='largest kernel dimension to enumerate')
    parser.add_argument('--chord-cap', type=_non_negative, default=SearchCaps.chord_cap,
                        help='largest number of chords of a chord set')
    parser.add_argument('--family-cap', type=_non_negative, default=SearchCaps.family_cap,
                        help='largest number of cycles handed to the solver')
    parser.add_argument('--widen', action='store_true', help='take chords from the whole complex')
    parser.add_argument('--seed', type=int, default=0, help='seed of the instance generators')
    parser.add_argument('--json', action='store_true', help='print JSON reports')
    parser.add_argument('--threads', type=int, default=1, help='number of worker processes')
    parser.add_argument('--log-level', default='WARNING', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                        help='threshold of diagnostics printed to stderr')
    parser.add_argument('--sweep-limit', type=int, default=SWEEP_LIMIT,
                        help='largest number of variables swept over all subsets')
    sub = parser.add_subparsers(dest='command', required=True)

    check = sub.add_parser('check', help='run all criteria on an ideal')
    check.add_argument('inputs', nargs=1, metavar='IDEAL', help='ideal file, - for stdin, or a built-in name')
    check.set_defaults(func=_check_command)

    repro = sub.add_parser('repro', help='reproduce the claims about a built-in example')
    repro.add_argument('name', choices=sorted({*_REPRO, *ALIASES}))
    repro.set_defaults(func=_repro_command)

    cross = sub.add_parser('crosscheck', help='compare homology with chordality on generated instances')
    cross.add_argument('kind', choices=['graphs', 'ideals'])
    cross.add_argument('--n-max', type=int, default=6, help='number of vertices')
    cross.add_argument('--sample', type=int, default=None, help='number of random instances')
    cross.add_argument('--degrees', type=int, nargs='+', default=None, help='values of d for ideals of degree d+1')
    cross.set_defaults(func=_crosscheck_command)

    homology = sub.add_parser('homology', help='print reduced homology over GF(2)')
    homology.add_argument('inputs', nargs=1, metavar='COMPLEX')
    homology.set_defaults(func=_homology_command)

    cycles = sub.add_parser('cycles', help='list face-minimal cycles')
    cycles.add_argument('inputs', nargs=1, metavar='COMPLEX')
    cycles.add_argument('--dim', type=int, required=True)
    cycles.set_defaults(func=_cycles_command)

    closure = sub.add_parser('closure', help='print closures, skeletons, and complements')
    closure.add_argument('inputs', nargs=1, metavar='COMPLEX')
    closure.add_argument('--dim', type=int, required=True)
    closure.add_argument('--op', choices=['closure', 'skeleton', 'complement'], default='closure')
    closure.set_defaults(func=_closure_command)

    betti = sub.add_parser('betti', help='print the graded Betti numbers of an ideal')
    betti.add_argument('inputs', nargs=1, metavar='IDEAL')
    betti.set_defaults(func=_betti_command)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    '''
    Run the application and return its exit code.
    '''
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_YES if err.code == 0 else EXIT_USAGE
    logging.basicConfig(level=args.log_level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')
    config = RunConfig.from_args(args)
    try:
        return int(args.func(config, args))
    except (ChordxError, ValueError, OSError) as err:
        print(f'chordx: {err}', file=sys.stderr)
        return EXIT_USAGE
