"""Convex real projective structures on surfaces: coordinates, gluing, domains."""
