"""Three embeddings of (SL(2) × ℂ*)/U⁻ and what the criterion says about each.

P² × P¹ is compact.  Removing the divisor D∞ leaves ℂ² × P¹, removing D10
leaves P² × ℂ.  All three share N = Z², V = R² and the single color D12.
"""
from hartogs_fans import fixtures
from hartogs_fans.documents import format_text
from hartogs_fans.hartogs import check_hartogs, verify_certificate

for title, fan in [("P2 x P1", fixtures.p2xp1()), ("C2 x P1", fixtures.c2xp1()), ("P2 x C", fixtures.p2xc())]:
    print("=" * 20, title)
    rep = check_hartogs(fan)
    print(format_text(rep, explain=True))
    if rep.hartogs is not None:
        print("certificate re-checked:", verify_certificate(rep, fan))

# Only the colored ray through (1, 0) keeps P2 x C from being Hartogs; the
# half plane y >= 0 is uncovered and λ = (0, 1) is nonnegative on all of it.
