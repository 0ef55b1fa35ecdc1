"""Exact rewriting engine for the q-deformed algebras U'_q(so_m), U_q(iso_m) and U'_{q,eps}(so_3)."""
