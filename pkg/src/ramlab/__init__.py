"""ramlab: ramification data of primes in extensions of Dedekind domains,
checked against the completion-side semisimple dimension."""

__version__ = "0.1.0"
