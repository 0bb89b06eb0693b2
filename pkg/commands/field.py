from configuration.config_system import config
from classgroup.group import class_number_check, narrow_class_group
from commands.common import CommandConfig, CommandResult
from quadfield.ideals import different
from quadfield.places import primes_above, t3_places
from quadfield.units import fundamental_unit, unit_index
from utils.logger import get_logger

logger = get_logger("FieldCommand")


def cmd_field(cfg: CommandConfig) -> CommandResult:
	"""Discriminant, different, places above 2 and 3, units and the narrow class number."""
	ctx = cfg.ctx
	ctx.require_two_split()
	eps, norm = fundamental_unit(ctx)
	payload = {
		"field": str(ctx),
		"D": ctx.D,
		"discriminant": ctx.disc,
		"different": str(different(ctx)),
		"primes_above_2": [str(v) for v in primes_above(ctx, 2)],
		"primes_above_3": [str(v) for v in primes_above(ctx, 3)],
		"T3": [str(v) for v in t3_places(ctx)],
		"fundamental_unit": {"x": str(eps.x), "y": str(eps.y)},
		"unit_norm": norm,
		"unit_index": unit_index(ctx),
	}
	if ctx.disc <= config.discriminant_bound:
		g = narrow_class_group(ctx)
		payload["narrow_class_number"] = g.order
		payload["wide_class_number"] = len(g.wide_classes())
		payload["class_group_consistent"] = class_number_check(g)
	else:
		logger.warning(f"Skipping the class group: discriminant {ctx.disc} exceeds {config.discriminant_bound}")
		payload["narrow_class_number"] = None
	return CommandResult(payload, title="Field")
