class Witness:
    """A subject element plus the named partners and equations that certify it."""

    def __init__(self, subject, partners=None, relations=None):
        self.subject = subject
        self.partners = dict(partners or {})
        self.relations = list(relations or [])

    def to_json(self):
        return {
            "subject": self.subject,
            "partners": dict(self.partners),
            "relations": list(self.relations),
        }

    def __repr__(self):
        return f"Witness(subject={self.subject!r}, partners={self.partners!r})"


class PropertyReport:
    """A decided predicate: holds / fails / unknown-at-bound, with evidence.

    holds is True, False or the string "unknown-at-bound" when a bounded
    (non-exhaustive) search could not settle the question.
    """

    def __init__(self, prop, holds, witness=None, counterexample=None,
                 params=None, detail=None, exhaustive=True):
        self.property = prop
        self.holds = holds
        self.witness = witness
        self.counterexample = counterexample
        self.params = dict(params or {})
        self.detail = detail
        self.exhaustive = exhaustive

    def __bool__(self):
        return self.holds is True

    def to_json(self):
        wit = self.witness
        if isinstance(wit, Witness):
            wit = wit.to_json()
        return {
            "property": self.property,
            "params": dict(self.params),
            "holds": self.holds,
            "witness": wit,
            "counterexample": self.counterexample,
            "detail": self.detail,
            "exhaustive": self.exhaustive,
        }

    def __repr__(self):
        return f"PropertyReport({self.property!r}, holds={self.holds!r})"
