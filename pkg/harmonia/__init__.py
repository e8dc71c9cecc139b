"""Octonionic cross products, Grassmannian bundles and the covariant calculus
needed to check harmonicity of their distinguished unit sections numerically."""

__version__ = "1.0.0"
