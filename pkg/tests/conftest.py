import numpy as np
import pytest

from krphase.tabulated import TabulatedWavefunction1D


@pytest.fixture(scope="session")
def gaussian_table() -> TabulatedWavefunction1D:
    """Unit Gaussian ground state, tabulated finely enough that the linear
    interpolation inside the Wigner evaluator stays below 1e-6."""
    q = np.linspace(-7.0, 7.0, 5601)
    return TabulatedWavefunction1D(q=q, values=np.pi**-0.25 * np.exp(-(q**2) / 2.0) + 0j)
