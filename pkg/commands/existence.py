from commands.common import EXIT_NEGATIVE, EXIT_OK, CommandConfig, CommandResult
from existence.construct import class_witnesses, decide, equiv_classes
from utils.logger import get_logger

logger = get_logger("ExistenceCommand")


def cmd_exists(cfg: CommandConfig) -> CommandResult:
	report = decide(cfg.ctx, cfg.weights, with_witness=False)
	code = EXIT_OK if report.exists else EXIT_NEGATIVE
	return CommandResult(report.as_dict(), code, title="Existence")


def cmd_triple(cfg: CommandConfig) -> CommandResult:
	report = decide(cfg.ctx, cfg.weights, with_witness=True)
	if not report.exists:
		logger.info(f"No triple over {cfg.ctx} for weights {[str(w) for w in cfg.weights]}")
		return CommandResult(report.as_dict(), EXIT_NEGATIVE, title="Triple")
	return CommandResult(report.as_dict(), EXIT_OK, title="Triple")


def cmd_count(cfg: CommandConfig) -> CommandResult:
	count = equiv_classes(cfg.ctx, cfg.weights)
	payload = {
		"field": str(cfg.ctx),
		"weights": [str(w) for w in cfg.weights],
		"class_count": count,
		"exists": count > 0,
	}
	table, headers = None, []
	if cfg.witnesses:
		witnesses = class_witnesses(cfg.ctx, cfg.weights)
		payload["witnesses"] = [t.as_dict() for t in witnesses]
		table = [[i, str(t.beta), ", ".join(str(v) for v in t.S3) or "-", str(t.ideal)] for i, t in enumerate(witnesses, 1)]
		headers = ["#", "beta", "S3", "ideal"]
	return CommandResult(payload, EXIT_OK if count else EXIT_NEGATIVE, "Classes", table, headers)
