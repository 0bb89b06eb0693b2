import argparse
import signal
import sys

from dotenv import load_dotenv

from commands.common import EXIT_INTERNAL, EXIT_USAGE, JSON, TEXT, CommandConfig, render
from commands.existence import cmd_count, cmd_exists, cmd_triple
from commands.field import cmd_field
from commands.theta import cmd_characters, cmd_theta, cmd_verify
from configuration.config_system import config
from utils.errors import ThetaError
from utils.logger import get_logger, setup_application_logging

load_dotenv()

APPLICATION_NAME = "halftheta"
app_logger = setup_application_logging(app_name=APPLICATION_NAME)

logger = get_logger("main")

COMMANDS = {
	"field": cmd_field,
	"exists": cmd_exists,
	"triple": cmd_triple,
	"count": cmd_count,
	"theta": cmd_theta,
	"verify": cmd_verify,
	"characters": cmd_characters,
}


def build_parser() -> argparse.ArgumentParser:
	parser = argparse.ArgumentParser(
		prog=APPLICATION_NAME,
		description="Half-integral weight Hilbert modular theta series over Q and real quadratic fields.",
	)
	parser.add_argument("--config", help="configuration file or directory (overrides HALFTHETA_CONFIG)")
	sub = parser.add_subparsers(dest="command", required=True)

	def add(name: str, help_text: str, weights: bool = True) -> argparse.ArgumentParser:
		p = sub.add_parser(name, help=help_text)
		p.add_argument("--D", required=True, help="square-free D > 1, or 'rational'")
		if weights:
			p.add_argument("--weights", help="comma list of 1/2 and 3/2, one per real place")
		p.add_argument("--format", choices=[JSON, TEXT], default=JSON)
		return p

	add("field", "field invariants", weights=False)
	add("exists", "existence verdict")
	add("triple", "explicit normalized triple")
	count = add("count", "number of equivalence classes of triples")
	count.add_argument("--witnesses", action="store_true", help="list one triple per class")
	theta = add("theta", "q-expansion as JSON lines")
	theta.add_argument("--bound", type=str, help="trace bound")
	theta.add_argument("--output", help="write JSON lines to this file")
	verify = add("verify", "random transformation-law suite")
	verify.add_argument("--tol", type=float)
	verify.add_argument("--seed", type=int)
	verify.add_argument("--words", type=int, help="number of random words")
	add("characters", "genuine characters at the places of S2 and T3", weights=False)
	return parser


def main(argv=None) -> int:
	parser = build_parser()
	args = parser.parse_args(argv)
	try:
		if args.config:
			config.load_config(args.config)
		cfg = CommandConfig.from_args(args)
		logger.debug(f"Running {args.command} for {cfg.ctx}")
		result = COMMANDS[args.command](cfg)
	except ThetaError as e:
		logger.error(f"{args.command} failed: {e}")
		print(f"error: {e}", file=sys.stderr)
		return EXIT_USAGE
	except ValueError as e:
		logger.error(f"Invalid argument for {args.command}: {e}")
		print(f"error: {e}", file=sys.stderr)
		return EXIT_USAGE
	except Exception as e:
		logger.critical(f"Internal error in {args.command}: {e}", exc_info=True)
		return EXIT_INTERNAL
	print(render(result, cfg.fmt))
	return result.code


if __name__ == "__main__":
	def signal_handler(signum, frame):
		logger.info(f"Received signal {signum}, stopping")
		sys.exit(130)


	signal.signal(signal.SIGINT, signal_handler)
	signal.signal(signal.SIGTERM, signal_handler)

	sys.exit(main())
