import json
from dataclasses import dataclass, field

EXIT_DECIDED, EXIT_ERROR, EXIT_UNDECIDED = 0, 1, 2
UNDECIDED_PREFIXES = ("Inconclusive", "NotDetectedUpTo", "NotFoundUpTo")


def exit_code_for(status):
    return EXIT_UNDECIDED if str(status).startswith(UNDECIDED_PREFIXES) else EXIT_DECIDED


@dataclass
class Report:
    """
    One command run: echo of the inputs, a `status` label, the `result` document, hypotheses consumed,
    the certificate `recheck` outcome and engine counters. Timing is kept out of `to_dict` so documents are byte-stable.
    """

    command: str
    status: str
    result: dict = field(default_factory=dict)
    inputs: dict = field(default_factory=dict)
    hypotheses: tuple = field(default_factory=tuple)
    recheck: object = None
    engine: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def exit_code(self):
        return exit_code_for(self.status)

    def to_dict(self):
        return {
            "command": self.command,
            "status": self.status,
            "decided": self.exit_code == EXIT_DECIDED,
            "inputs": self.inputs,
            "result": self.result,
            "hypotheses": list(self.hypotheses),
            "recheck": self.recheck,
            "engine": self.engine,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def summary(self):
        lines = [">>>> {}: {}".format(self.command, self.status)]
        for key, value in sorted(self.result.items()):
            if isinstance(value, (dict, list)) and len(json.dumps(value)) > 120:
                continue
            lines.append("  {}: {}".format(key, value))
        if len(self.hypotheses) != 0:
            lines.append("  hypotheses: {}".format(", ".join(self.hypotheses)))
        if self.recheck is not None:
            lines.append("  recheck: {}".format(self.recheck))
        lines.append(">>>> engine: {}, took {:.3f}s".format(", ".join("{}={}".format(kk, vv) for kk, vv in sorted(self.engine.items())), self.seconds))
        return "\n".join(lines)

    def save(self, path):
        with open(path, "w", encoding="utf-8") as ff:
            ff.write(self.to_json())
