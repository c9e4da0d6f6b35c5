"""
Hodge diamonds and the chi_y genus
==================================

Build a diamond by hand, validate it at both levels, and read off the genus
and its three classical specializations.  Everything is exact integer
arithmetic; every equality shown here is zero-tolerance.
"""

from hkgenus import HodgeDiamond, ValidationLevel

##############################################################################
# The K3 table.  Rows are indexed by p, columns by q, entry (p, q) = h^{p,q}.
# The corners are forced by irreducibility (h^{0,0} = 1, h^{1,0} = 0,
# h^{2,0} = 1) and the middle by the Euler number 24.

k3 = HodgeDiamond(((1, 0, 1), (0, 20, 0), (1, 0, 1)), name="K3")
print("the K3 diamond:")
print(k3)

##############################################################################
# Validation has two levels.  STRUCTURAL checks the symmetries a compact
# hyper-Kahler manifold imposes (Serre duality, conjugation, the column
# symmetry from the 2-form) plus nonnegative primitive multiplicities;
# STRICT adds the irreducibility corner values.

print()
print("STRUCTURAL:", k3.validate(ValidationLevel.STRUCTURAL).summary())
print("STRICT:    ", k3.validate(ValidationLevel.STRICT).summary())

##############################################################################
# A deliberately broken table: zeroing h^{2,0} while keeping h^{0,0} = 1
# violates the column symmetry and is caught with coordinates.

broken = HodgeDiamond(((1, 0, 0), (0, 20, 0), (0, 0, 1)))
print()
print("broken table:", broken.validate().summary())

##############################################################################
# A symmetric perturbation (h^{1,1}: 20 -> 19) passes every symmetry check;
# the symmetries alone do not pin the diamond, which is exactly why the
# supertrace identity in demo 03 is a useful cross-check.

perturbed = HodgeDiamond(((1, 0, 1), (0, 19, 0), (1, 0, 1)))
print("perturbed table still validates:", perturbed.validate().ok)

##############################################################################
# The chi_y genus: coefficient of y^p is the alternating column sum
# sum_q (-1)^q h^{p,q}.  At y = -1, 0, 1 it specializes to the Euler
# characteristic, the Todd genus and the signature.

genus = k3.chi_y()
print()
print("chi_y(K3) =", genus.to_string("y"))
euler, todd, signature = k3.classical_values()
print(f"euler = {euler}, todd genus = {todd}, signature = {signature}")

##############################################################################
# The normalized genus chi_{-y}/y^n is palindromic: invariance under
# y -> 1/y, which is the column symmetry h^{p,q} = h^{2n-p,q} in disguise.

normalized = k3.normalized_genus()
print()
print("chi_{-y}/y =", normalized.to_string("y"))
print("palindromic:", normalized.is_palindromic())
print("value at y=1 equals the Euler number:", normalized.evaluate(1))
