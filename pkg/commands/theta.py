import io

from commands.common import EXIT_NEGATIVE, EXIT_OK, EXIT_TOLERANCE, TEXT, CommandConfig, CommandResult
from existence.construct import construct_triple
from multiplier.characters import genuine_character_table
from quadfield.places import t3_places, two_places
from theta.series import export_jsonl, q_expansion
from theta.verify import transform_suite
from utils.logger import get_logger, log_context

logger = get_logger("ThetaCommand")

EXPANSION_HEADERS = ["nu", "trace", "xi", "sign", "coeff"]


def _triple_or_none(cfg: CommandConfig):
	t = construct_triple(cfg.ctx, cfg.weights)
	if t is None:
		logger.info(f"No triple over {cfg.ctx} for weights {[str(w) for w in cfg.weights]}")
	return t


def cmd_theta(cfg: CommandConfig) -> CommandResult:
	"""q-expansion up to the trace bound as JSON lines, to --output or stdout."""
	t = _triple_or_none(cfg)
	if t is None:
		return CommandResult({"exists": False}, EXIT_NEGATIVE, title="Theta")
	with log_context(logger, f"q-expansion of {t} up to {cfg.bound}"):
		expansion = q_expansion(t, cfg.bound)
	payload = {"triple": t.as_dict(), "bound": str(cfg.bound), "terms": len(expansion.entries)}
	if cfg.output:
		with open(cfg.output, "w", encoding="utf-8") as f:
			export_jsonl(expansion, f)
		payload["output"] = cfg.output
	if cfg.fmt == TEXT:
		return CommandResult(payload, EXIT_OK, "Theta", expansion.rows(), EXPANSION_HEADERS)
	if not cfg.output:
		buffer = io.StringIO()
		export_jsonl(expansion, buffer)
		return CommandResult(payload, EXIT_OK, title="Theta", raw=buffer.getvalue())
	return CommandResult(payload, EXIT_OK, title="Theta")


def cmd_verify(cfg: CommandConfig) -> CommandResult:
	t = _triple_or_none(cfg)
	if t is None:
		return CommandResult({"exists": False}, EXIT_NEGATIVE, title="Verify")
	with log_context(logger, f"transformation suite for {t}"):
		summary = transform_suite(t, words=cfg.words, seed=cfg.seed, tol=cfg.tol)
	payload = {"triple": t.as_dict(), "seed": cfg.seed, "tol": cfg.tol, **summary.as_dict()}
	return CommandResult(payload, EXIT_OK if summary.ok else EXIT_TOLERANCE, title="Verify")


def cmd_characters(cfg: CommandConfig) -> CommandResult:
	"""Genuine character values at u+(1) for the places of S2 and T3."""
	ctx = cfg.ctx
	ctx.require_two_split()
	places = list(two_places(ctx)) + list(t3_places(ctx))
	table = [[str(v), v.q, ", ".join(str(r) for r in genuine_character_table(ctx, v))] for v in places]
	payload = {"field": str(ctx), "places": {row[0]: row[2].split(", ") for row in table}}
	return CommandResult(payload, EXIT_OK, "Characters", table, ["place", "q", "values at u+(1)"])
