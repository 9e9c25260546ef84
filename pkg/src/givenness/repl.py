"""Interactive shell over a single engine session."""

from __future__ import annotations

import cmd
import shlex
import sys
from typing import Optional, TextIO

from .engine import CognitiveStatusEngine
from .errors import GivennessError
from .model import CognitiveStatus, LinguisticStatus, UtteranceEvent, WorldModel
from .scenario import Config, load_scenario
from .trace import describe_record

USAGE = """\
commands:
  load <path>                          load a scenario's world (resets the session)
  say <speaker> [id:topic|id:mention ...]  advance one turn
  step                                 advance one turn with no mentions
  status <id>                          show an entity's distribution and status
  buffers                              show the tier buffers
  describe <id>                        generate a referring form
  quit                                 leave"""


class Repl(cmd.Cmd):
    prompt = "gh> "
    intro = "Givenness Hierarchy status engine. Type 'help' for commands."

    def __init__(self, config: Optional[Config] = None, world: Optional[WorldModel] = None,
                 stdin: Optional[TextIO] = None, stdout: Optional[TextIO] = None):
        super().__init__(stdin=stdin, stdout=stdout)
        if stdin is not None:
            self.use_rawinput = False
        self.config = config or Config()
        self.reset(world or WorldModel())

    def reset(self, world: WorldModel) -> None:
        self.engine = CognitiveStatusEngine(world, self.config.transitions)

    def _say(self, text: str) -> None:
        self.stdout.write(text + "\n")

    def onecmd(self, line):
        try:
            return super().onecmd(line)
        except (GivennessError, OSError, ValueError) as exc:
            self._say(f"error: {exc}")
            return False

    def emptyline(self):
        return False

    def default(self, line):
        if line.strip() == "EOF":
            return True
        self._say(f"unknown command: {line.split()[0]}")
        self._say(USAGE)
        return False

    def do_help(self, arg):
        self._say(USAGE)

    def do_load(self, arg):
        args = shlex.split(arg)
        if len(args) != 1:
            self._say("usage: load <path>")
            return
        scenario = load_scenario(args[0])
        self.reset(scenario.world)
        self._say(f"loaded {len(scenario.world)} entities")

    def do_say(self, arg):
        args = arg.split()
        if not args:
            self._say("usage: say <speaker> [id:topic|id:mention ...]")
            return
        speaker, mentions = args[0], args[1:]
        annotations = {}
        for token in mentions:
            entity_id, sep, role = token.rpartition(":")
            if not sep:
                entity_id, role = token, "mention"
            self.engine.world.get(entity_id)
            linguistic = LinguisticStatus.from_role(role)
            if annotations.get(entity_id) is not LinguisticStatus.TOPIC:
                annotations[entity_id] = linguistic
        self.engine.observe(UtteranceEvent(self.engine.turn, speaker, annotations))
        self._say(f"turn {self.engine.turn - 1} observed")

    def do_step(self, arg):
        self.engine.observe(UtteranceEvent(self.engine.turn, "", {}))
        self._say(f"turn {self.engine.turn - 1} observed")

    def do_status(self, arg):
        entity_id = arg.strip()
        dist = self.engine.distribution(entity_id)
        if dist is None:
            self._say(f"{entity_id}: untracked {CognitiveStatus.UNIQUELY_IDENTIFIABLE.label}")
            return
        pi, pa, pf = dist.as_tuple()
        self._say(f"{entity_id}: ({pi:.6f}, {pa:.6f}, {pf:.6f}) {dist.argmax().label}")

    def do_buffers(self, arg):
        buffers = self.engine.buffers
        for status in CognitiveStatus.tracked():
            self._say(f"{status.label}: {' '.join(sorted(buffers[status])) or '-'}")

    def do_describe(self, arg):
        entity_id = arg.strip()
        record = describe_record(self.engine, entity_id, self.config)
        line = f'"{record.text}" [{record.form}, {record.status}, {record.verdict}]'
        if record.ambiguous:
            line += " (warning: ambiguous, a distractor matches every property)"
        self._say(line)

    def do_quit(self, arg):
        return True

    do_exit = do_quit
    do_EOF = do_quit


def run_repl(config: Optional[Config] = None, stdin: Optional[TextIO] = None,
             stdout: Optional[TextIO] = None) -> None:
    shell = Repl(config, stdin=stdin, stdout=stdout)
    if stdin is not None or not sys.stdin.isatty():
        shell.intro = None
        shell.prompt = ""
    shell.cmdloop()
