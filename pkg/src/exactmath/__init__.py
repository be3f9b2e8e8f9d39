from src.exactmath.gcd import divisors, extended_gcd, gcd_all, mod_inverse
from src.exactmath.primes import is_prime, next_prime
from src.exactmath.rational import as_rational, format_rational

__all__ = [
    "as_rational",
    "divisors",
    "extended_gcd",
    "format_rational",
    "gcd_all",
    "is_prime",
    "mod_inverse",
    "next_prime",
]
