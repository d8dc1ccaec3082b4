"""
Command line front end.

    rtilde compute --group A3 --u e --v "1 2 1 3 2 1"
    rtilde leaves --group A1 --v "1 1 1"
    rtilde verify --group A3 --all-pairs
    rtilde closed pagliacci --n 7
    rtilde render --group A2 --v "1 2 1" --output out/
    rtilde scan --group Sym7 --w p:3456712

Exit codes: 0 success, 1 methods disagree (or verify found a mismatch),
2 invalid or unsupported input.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from rtilde.closedforms.conjecture import format_report, scan_pair, scan_pairs
from rtilde.closedforms.configurations import config_to_word, read_configuration
from rtilde.config import configure_logging, settings
from rtilde.coxeter import CoxeterGroup, Element, Word, format_word, parse_word, read_matrix_file
from rtilde.diagrams import leaf_file_name, leaf_to_sgraph, sgraph_to_svg, sgraph_to_text
from rtilde.errors import MethodDisagreementError, PreconditionError, RTildeError
from rtilde.lightleaves import iter_leaves, leaves, serialize_leaves
from rtilde.poly import IntPolynomial, substitute_t_minus_tinv, to_classical_normalization
from rtilde.registry import closed_registry, method_registry, resolve_group_name
from rtilde.symmetric import SymmetricGroup, build_group, parse_permutation, perm_to_word
from rtilde.verify import DEFAULT_MAX_LENGTH, parallel_map, verify_group

logger = logging.getLogger(__name__)

COMMANDS = ("compute", "leaves", "verify", "closed", "render", "scan")
REQUIRED_INPUTS = {
    "compute": ("u", "v"),
    "leaves": ("v",),
    "render": ("v", "output"),
    "scan": ("w",),
    "closed": ("family",),
}


class CliRequest(BaseModel):
    """A validated command line invocation."""
    model_config = ConfigDict(extra="ignore")

    command: Literal["compute", "leaves", "verify", "closed", "render", "scan"]
    group: Optional[str] = None
    matrix: Optional[Path] = None
    backend: Literal["auto", "generic", "symmetric"] = "auto"
    u: Optional[str] = None
    v: Optional[str] = None
    w: Optional[str] = None
    method: Literal["all", "diagrammatic", "recursive", "hecke", "closed"] = "all"
    form: Literal["rtilde", "laurent", "classical"] = "rtilde"
    max_length: Optional[int] = Field(default=None, ge=0)
    all_pairs: bool = False
    all_words: bool = False
    workers: Optional[int] = Field(default=None, ge=1)
    family: Optional[str] = None
    n: Optional[int] = Field(default=None, ge=0)
    a: Optional[int] = None
    b: Optional[int] = None
    s: int = Field(default=1, ge=1)
    config: Optional[Path] = None
    output: Optional[Path] = None
    text: bool = False

    @model_validator(mode="after")
    def check_inputs(self) -> "CliRequest":
        if self.group and self.matrix:
            raise ValueError("use either --group or --matrix, not both")
        if self.command != "closed" and not (self.group or self.matrix):
            raise ValueError(f"{self.command} needs --group or --matrix")
        for name in REQUIRED_INPUTS.get(self.command, ()):
            if getattr(self, name) is None:
                raise ValueError(f"{self.command} needs --{name.replace('_', '-')}")
        if self.command == "closed" and self.family not in closed_registry.names():
            raise ValueError(f"unknown family {self.family!r}; choose from {', '.join(closed_registry.names())}")
        return self


# group and element input

def build_group_for(request: CliRequest) -> CoxeterGroup:
    if request.matrix is not None:
        matrix = read_matrix_file(request.matrix)
    elif request.group is not None:
        matrix = resolve_group_name(request.group)
    else:
        return SymmetricGroup(_inferred_size(request))
    group = build_group(matrix, request.backend)
    logger.info(f"Using {group.name} ({group.backend} backend)")
    return group


def _inferred_size(request: CliRequest) -> int:
    """Smallest symmetric group holding every input of a closed command."""
    size = 2
    for text in (request.u, request.v):
        if text is None:
            continue
        if text.strip().startswith("p:"):
            size = max(size, len(parse_permutation(text)))
        else:
            size = max(size, max(parse_word(text), default=0) + 2)
    if request.n is not None:
        size = max(size, request.n)
    if request.b is not None:
        size = max(size, request.b)
    if request.family == "power":
        size = max(size, request.s + 1)
    if request.config is not None:
        size = max(size, max(config_to_word(read_configuration(request.config)), default=0) + 2)
    return size


def parse_input(group: CoxeterGroup, text: str) -> Tuple[Element, Word]:
    """An element and the word it was given by (the canonical word for permutations)."""
    if text.strip().startswith("p:"):
        perm = parse_permutation(text)
        if len(perm) != group.rank + 1 or not group.matrix.is_type_a():
            raise PreconditionError(f"permutation {text} does not belong to {group.name}")
        if isinstance(group, SymmetricGroup):
            u = group.perm_to_element(perm)
        else:
            u = group.canonicalize(perm_to_word(perm))
        return u, u.word
    word = parse_word(text, group.rank)
    return group.canonicalize(word), word


def format_polynomial(poly: IntPolynomial, form: str, u: Element, word: Word) -> str:
    if form == "laurent":
        return str(substitute_t_minus_tinv(poly))
    if form == "classical":
        if poly.is_zero():
            return "0"
        return to_classical_normalization(substitute_t_minus_tinv(poly), u.length, len(word)).to_string("q")
    return str(poly)


# commands

def run_compute(request: CliRequest, group: CoxeterGroup) -> int:
    u, _ = parse_input(group, request.u)
    _, word = parse_input(group, request.v)
    names = method_registry.names() if request.method == "all" else [request.method]
    results: Dict[str, IntPolynomial] = {}
    for name in names:
        value = method_registry.call(name, group=group, u=u, word=word)
        if value is None:
            logger.info(f"Method {name} does not apply to u={u} v={format_word(word)}")
            continue
        results[name] = value
    if not results:
        raise PreconditionError(f"method {request.method} does not apply to v={format_word(word)}")
    if len(set(results.values())) > 1:
        raise MethodDisagreementError(f"methods disagree on u={u} v={format_word(word)}", results)
    print(format_polynomial(next(iter(results.values())), request.form, u, word))
    return 0


def run_leaves(request: CliRequest, group: CoxeterGroup) -> int:
    _, word = parse_input(group, request.v)
    if request.u is not None:
        u, _ = parse_input(group, request.u)
        found = leaves(group, word, u)
    else:
        found = list(iter_leaves(group, word))
    for line in serialize_leaves(found):
        print(line)
    return 0


def run_verify(request: CliRequest, group: CoxeterGroup) -> int:
    max_length = DEFAULT_MAX_LENGTH if request.max_length is None else request.max_length
    report = verify_group(
        group,
        max_length=max_length,
        all_pairs=request.all_pairs,
        all_words=request.all_words,
        workers=request.workers,
    )
    for line in report.lines():
        print(line)
    return 0 if report.ok else 1


def run_closed(request: CliRequest, group: CoxeterGroup) -> int:
    arguments: Dict[str, Any] = {
        "group": group,
        "n": request.n,
        "a": request.a,
        "b": request.b,
        "s": request.s,
    }
    if request.u is not None:
        arguments["u"] = parse_input(group, request.u)[0]
    if request.v is not None:
        arguments["v"], arguments["word"] = parse_input(group, request.v)
    if request.config is not None:
        arguments["config"] = read_configuration(request.config)
    for line in closed_registry.call(request.family, **arguments):
        print(line)
    return 0


def run_render(request: CliRequest, group: CoxeterGroup) -> int:
    _, word = parse_input(group, request.v)
    if request.u is not None:
        found = leaves(group, word, parse_input(group, request.u)[0])
    else:
        found = list(iter_leaves(group, word))
    found.sort(key=lambda leaf: leaf.code)
    request.output.mkdir(parents=True, exist_ok=True)
    for leaf in found:
        graph = leaf_to_sgraph(leaf)
        name = leaf_file_name(leaf)
        (request.output / name).write_bytes(sgraph_to_svg(graph))
        print(name)
        if request.text:
            print(leaf.serialize())
            print(sgraph_to_text(graph), end="")
    logger.info(f"Wrote {len(found)} SVG files to {request.output}")
    return 0


def run_scan(request: CliRequest, group: CoxeterGroup) -> int:
    w, _ = parse_input(group, request.w)
    pairs = scan_pairs(group, w)
    workers = settings.compute.workers if request.workers is None else request.workers
    entries = parallel_map(scan_pair, pairs, group, workers, desc="scan")
    print(format_report(entries), end="")
    return 0


HANDLERS = {
    "compute": run_compute,
    "leaves": run_leaves,
    "verify": run_verify,
    "closed": run_closed,
    "render": run_render,
    "scan": run_scan,
}


def run(request: CliRequest) -> int:
    """Execute a validated request and return the exit status."""
    group = build_group_for(request)
    return HANDLERS[request.command](request, group)


# argument parsing

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group()
    source.add_argument("--group", help="group shorthand: A<n>, I2(<m>) or Sym<n>")
    source.add_argument("--matrix", type=Path, help="Coxeter matrix file ('rank N' then N rows, 0 = infinity)")
    common.add_argument("--backend", choices=["auto", "generic", "symmetric"], default="auto")
    common.add_argument("--log-level", default=None, help="logging level (default from RTILDE_LOG_LEVEL)")

    parser = argparse.ArgumentParser(prog="rtilde", description="R-tilde polynomials of Coxeter systems")
    commands = parser.add_subparsers(dest="command", required=True)

    compute = commands.add_parser("compute", parents=[common], help="R-tilde(u, v) by one or all methods")
    compute.add_argument("--u", required=True, help="word ('1 2 1', 'e') or permutation ('p:321')")
    compute.add_argument("--v", required=True, help="word (need not be reduced) or permutation")
    compute.add_argument("--method", choices=["all"] + method_registry.names(), default="all")
    compute.add_argument("--form", choices=["rtilde", "laurent", "classical"], default="rtilde")

    leaves_cmd = commands.add_parser("leaves", parents=[common], help="list the light leaves of a word")
    leaves_cmd.add_argument("--v", required=True)
    leaves_cmd.add_argument("--u")

    verify = commands.add_parser("verify", parents=[common], help="cross-check every method over a group")
    span = verify.add_mutually_exclusive_group()
    span.add_argument("--max-length", type=int)
    span.add_argument("--all-pairs", action="store_true")
    verify.add_argument("--all-words", action="store_true", help="also check every reduced expression")
    verify.add_argument("--workers", type=int)

    closed = commands.add_parser("closed", parents=[common], help="evaluate a closed formula")
    closed.add_argument("family", choices=closed_registry.names())
    closed.add_argument("--u")
    closed.add_argument("--v")
    closed.add_argument("--n", type=int)
    closed.add_argument("--a", type=int)
    closed.add_argument("--b", type=int)
    closed.add_argument("--s", type=int, default=1, help="generator of a power word (1-based)")
    closed.add_argument("--config", type=Path, help="point configuration file, one 'i j' per line")

    render = commands.add_parser("render", parents=[common], help="write one SVG per light leaf")
    render.add_argument("--v", required=True)
    render.add_argument("--u")
    render.add_argument("--output", type=Path, required=True)
    render.add_argument("--text", action="store_true", help="also print ASCII sketches")

    scan = commands.add_parser("scan", parents=[common], help="factorization scan below a permutation")
    scan.add_argument("--w", required=True)
    scan.add_argument("--workers", type=int)

    return parser


def _print_disagreement(error: MethodDisagreementError) -> None:
    print(f"disagreement: {error}")
    for name, value in error.results.items():
        print(f"  {name}: {value}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    try:
        request = CliRequest(**vars(args))
        return run(request)
    except MethodDisagreementError as e:
        logger.error(f"{e}")
        _print_disagreement(e)
        return 1
    except (RTildeError, ValueError, OSError) as e:
        logger.error(f"Request failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return 2
