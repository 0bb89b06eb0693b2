import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from tabulate import tabulate

from configuration.config_system import config
from quadfield.field import FieldCtx
from quadfield.triple import parse_weights
from utils.errors import ThetaError

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_TOLERANCE = 3
EXIT_INTERNAL = 4

JSON = "json"
TEXT = "text"


@dataclass
class CommandConfig:
	ctx: FieldCtx
	weights: Tuple[Fraction, ...]
	bound: Fraction
	tol: float
	seed: int
	fmt: str = JSON
	output: Optional[str] = None
	witnesses: bool = False
	words: Optional[int] = None

	@classmethod
	def from_args(cls, args) -> "CommandConfig":
		ctx = FieldCtx.parse(args.D)
		weights_text = getattr(args, "weights", None)
		if weights_text is None:
			weights_text = ",".join(["1/2"] * ctx.degree)
		fmt = getattr(args, "format", JSON)
		if fmt not in (JSON, TEXT):
			raise ThetaError(f"unknown format {fmt!r}")
		bound = getattr(args, "bound", None)
		tol = getattr(args, "tol", None)
		seed = getattr(args, "seed", None)
		return cls(
			ctx=ctx,
			weights=parse_weights(weights_text, ctx),
			bound=Fraction(config.default_trace_bound if bound is None else bound),
			tol=config.default_tol if tol is None else float(tol),
			seed=config.default_seed if seed is None else int(seed),
			fmt=fmt,
			output=getattr(args, "output", None),
			witnesses=bool(getattr(args, "witnesses", False)),
			words=getattr(args, "words", None),
		)


@dataclass
class CommandResult:
	payload: Dict[str, Any]
	code: int = EXIT_OK
	title: str = ""
	table: Optional[List[List[Any]]] = None
	headers: List[str] = field(default_factory=list)
	raw: Optional[str] = None


def to_json(payload: Dict[str, Any]) -> str:
	"""Deterministic JSON: sorted keys, no trailing spaces."""
	return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)


def _cell(value: Any) -> str:
	if isinstance(value, (dict, list)):
		return json.dumps(value, sort_keys=True, ensure_ascii=False)
	return str(value)


def render(result: CommandResult, fmt: str) -> str:
	if fmt == JSON:
		if result.raw is not None:
			return result.raw.rstrip("\n")
		return to_json(result.payload)
	parts = []
	summary = [[key, _cell(value)] for key, value in sorted(result.payload.items())]
	if summary:
		parts.append(tabulate(summary, headers=[result.title or "Key", "Value"], tablefmt="fancy_grid"))
	if result.table:
		parts.append(tabulate(result.table, headers=result.headers, tablefmt="fancy_grid"))
	return "\n".join(parts)
