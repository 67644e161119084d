"""
Normal forms by rewriting.

Word rules ``lhs -> rhs`` are applied to suffixes while words are built
letter by letter; since every prefix of an irreducible word is
irreducible, a rule can only match at the end of the word being extended.
Results are memoized per ``(word, letter)``.

Central relations are applied afterwards: while some term's exponent vector
dominates that of a central relation's leading word, the term is cancelled
against the normal form of ``m'·c`` for the ordered complement ``m'``.
"""

import logging

from qflag.errors import ReductionError

log = logging.getLogger(__name__)

DEFAULT_MAX_STEPS = 2000000


def _add_term(terms, key, coeff):
    value = terms.get(key)
    value = coeff if value is None else value + coeff
    if value:
        terms[key] = value
    else:
        terms.pop(key, None)


class Rule:

    __slots__ = ('name', 'lhs', 'rhs')

    def __init__(self, name, lhs, rhs):
        self.name = name
        self.lhs = tuple(lhs)
        self.rhs = dict(rhs)

    def __repr__(self):
        return '<Rule %s>' % self.name


class CentralRelation:

    """
    A relation ``c = 0`` whose left side is central. Its leading word is the
    largest word of ``c``.
    """

    def __init__(self, name, presentation, terms):
        self.name = name
        self.terms = dict(terms)
        self.lead = max(self.terms, key=presentation.key)
        self.lead_exponents = presentation.exponents(self.lead)

    def __repr__(self):
        return '<CentralRelation %s>' % self.name


class ReductionStep:

    __slots__ = ('rule', 'word', 'position')

    def __init__(self, rule, word, position):
        self.rule = rule
        self.word = tuple(word)
        self.position = position

    def __eq__(self, other):
        return (self.rule, self.word, self.position) == (other.rule, other.word, other.position)

    def __repr__(self):
        return '<ReductionStep %s at %s>' % (self.rule, self.position)


class ReductionTrace:

    """
    The record of a traced reduction: the input, every applied step and
    the output. Central reductions have ``position`` ``None``.
    """

    def __init__(self, input, steps, output, fixpoint):
        self.input = input
        self.steps = list(steps)
        self.output = output
        self.fixpoint = fixpoint

    def replay(self, rewriter):
        terms = dict(self.input.terms)
        for step in self.steps:
            rewriter.apply_step(terms, step)
        return terms == self.output.terms

    def as_dict(self):
        algebra = self.input.algebra
        return {
            'input': str(self.input),
            'output': str(self.output),
            'fixpoint': self.fixpoint,
            'steps': [{
                'rule': step.rule,
                'word': algebra.format_word(step.word) or '1',
                'position': step.position,
            } for step in self.steps],
        }


class Rewriter:

    """
    Memoizing rewriter for one presentation::

        Rewriter(A).normal_form(u12 * u11)
        # -> (1/q)*u11.u12
    """

    def __init__(self, presentation, max_steps=DEFAULT_MAX_STEPS):
        self.presentation = presentation
        self.field = presentation.field
        self.max_steps = max_steps
        self.rules = list(presentation.rules)
        self.central = list(presentation.central)
        self.by_name = {rule.name: rule for rule in self.rules}
        self.by_name.update((c.name, c) for c in self.central)

        self.by_last = {}
        for rule in self.rules:
            self.by_last.setdefault(rule.lhs[-1], []).append(rule)

        self.steps = 0
        self._limit = None
        self._depth = 0
        self._append_cache = {}
        self._reduce_cache = {}
        self._word_cache = {}
        self._product_cache = {}

    def __repr__(self):
        return '<Rewriter %s: %d rules, %d cached words>' % (
            self.presentation.name, len(self.rules), len(self._word_cache))

    # Word rules ##############################################################

    def _count(self):
        self.steps += 1
        if self._limit is not None and self.steps > self._limit:
            raise ReductionError('%s: more than %d rewriting steps' % (
                self.presentation.name, self.max_steps))

    def _suffix_rule(self, word):
        for rule in self.by_last.get(word[-1], ()):
            n = len(rule.lhs)
            if word[-n:] == rule.lhs:
                return rule, len(word) - n
        return None, None

    def _append(self, word, letter):
        key = (word, letter)
        cached = self._append_cache.get(key)
        if cached is not None:
            return cached

        extended = word + (letter,)
        rule, position = self._suffix_rule(extended)
        if rule is None:
            result = {extended: self.field.one}
        else:
            self._count()
            prefix = extended[:position]
            result = {}
            for rword, rcoeff in rule.rhs.items():
                for w, c in self._extend(prefix, rword).items():
                    _add_term(result, w, rcoeff * c)

        self._append_cache[key] = result
        return result

    def _extend(self, word, letters):
        current = {word: self.field.one}
        for letter in letters:
            following = {}
            for w, c in current.items():
                for nw, nc in self._append(w, letter).items():
                    _add_term(following, nw, c * nc)
            current = following
        return current

    def reduce_word(self, word):
        """
        Normal form of ``word`` under the word rules only.
        """
        word = tuple(word)
        cached = self._reduce_cache.get(word)
        if cached is None:
            cached = self._extend((), word)
            self._reduce_cache[word] = cached
        return cached

    # Central relations #######################################################

    def _central_candidate(self, terms):
        key = self.presentation.key
        best = None
        for word in terms:
            exponents = self.presentation.exponents(word)
            for relation in self.central:
                if all(e >= f for e, f in zip(exponents, relation.lead_exponents)):
                    if best is None or key(word) > key(best[0]):
                        best = (word, relation)
                    break
        return best

    def _central_step(self, terms, word, relation):
        exponents = self.presentation.exponents(word)
        complement = self.presentation.word_from_exponents(
            [e - f for e, f in zip(exponents, relation.lead_exponents)])

        reduced = {}
        for cword, ccoeff in relation.terms.items():
            for w, c in self.reduce_word(complement + cword).items():
                _add_term(reduced, w, ccoeff * c)

        kappa = reduced.get(word)
        if not kappa:
            raise ReductionError('%s: central relation %s does not lead with %s' % (
                self.presentation.name, relation.name, self.presentation.format_word(word)))

        factor = terms[word] / kappa
        for w, c in reduced.items():
            _add_term(terms, w, -factor * c)

    def central_reduce(self, terms):
        terms = dict(terms)
        if not self.central:
            return terms

        while True:
            candidate = self._central_candidate(terms)
            if candidate is None:
                return terms
            self._count()
            self._central_step(terms, *candidate)

    # Entry points ############################################################

    def _enter(self):
        if self._depth == 0:
            self._limit = self.steps + self.max_steps
        self._depth += 1

    def _leave(self):
        self._depth -= 1
        if self._depth == 0:
            self._limit = None

    def normal_form_word(self, word):
        word = tuple(word)
        cached = self._word_cache.get(word)
        if cached is not None:
            return cached

        self._enter()
        try:
            result = self.central_reduce(self.reduce_word(word))
        finally:
            self._leave()

        self._word_cache[word] = result
        return result

    def product(self, w1, w2):
        """
        Normal form of the product of two words.
        """
        key = (w1, w2)
        cached = self._product_cache.get(key)
        if cached is not None:
            return cached

        if not w1:
            result = self.normal_form_word(w2)
        elif not w2:
            result = self.normal_form_word(w1)
        else:
            self._enter()
            try:
                terms = {}
                for w, c in self.reduce_word(w1).items():
                    for nw, nc in self._extend(w, w2).items():
                        _add_term(terms, nw, c * nc)
                result = self.central_reduce(terms)
            finally:
                self._leave()

        self._product_cache[key] = result
        return result

    def normal_form(self, a):
        """
        Normal form of the element ``a``: no rewrite rule applies to any of its
        words and no word is divisible by a central leading word.
        """
        from qflag.freealg.element import Element

        terms = {}
        for word, coeff in a.terms.items():
            for w, c in self.normal_form_word(word).items():
                _add_term(terms, w, coeff * c)
        return Element(a.algebra, terms)

    def is_normal(self, word):
        return self.normal_form_word(word) == {tuple(word): self.field.one}

    # Traced reduction ########################################################

    def _leftmost_match(self, word):
        for end in range(1, len(word) + 1):
            for rule in self.by_last.get(word[end - 1], ()):
                n = len(rule.lhs)
                if end >= n and word[end - n:end] == rule.lhs:
                    return rule, end - n
        return None, None

    def apply_step(self, terms, step):
        rule = self.by_name[step.rule]
        coeff = terms.get(step.word)
        if not coeff:
            raise ReductionError('step %s does not apply' % step.rule)

        if step.position is None:
            self._central_step(terms, step.word, rule)
            return

        del terms[step.word]
        head = step.word[:step.position]
        tail = step.word[step.position + len(rule.lhs):]
        for rword, rcoeff in rule.rhs.items():
            _add_term(terms, head + rword + tail, coeff * rcoeff)

    def reduce_with_trace(self, a, cap=None):
        """
        Reduce ``a`` one step at a time, always rewriting the largest reducible
        word at its leftmost match, and record every step in a
        :class:`ReductionTrace`. Exceeding ``cap`` steps raises
        :class:`~qflag.errors.ReductionError` carrying the partial trace.
        """
        from qflag.freealg.element import Element

        key = self.presentation.key
        cap = self.max_steps if cap is None else cap
        terms = dict(a.terms)
        steps = []

        while True:
            best = None
            for word in terms:
                rule, position = self._leftmost_match(word)
                if rule is not None and (best is None or key(word) > key(best.word)):
                    best = ReductionStep(rule.name, word, position)

            if best is None:
                candidate = self._central_candidate(terms)
                if candidate is None:
                    break
                best = ReductionStep(candidate[1].name, candidate[0], None)

            if len(steps) >= cap:
                trace = ReductionTrace(a, steps, Element(a.algebra, terms), False)
                raise ReductionError('%s: more than %d traced steps' % (
                    self.presentation.name, cap), trace=trace)

            self.apply_step(terms, best)
            steps.append(best)

        return ReductionTrace(a, steps, Element(a.algebra, terms), True)
