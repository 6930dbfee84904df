"""Universal gate sets from Clifford algebras and Weyl pairs."""
