import pytest

from devices.datasheet import GateDrive, MosfetDatasheet, load_datasheet


@pytest.fixture
def nmos() -> MosfetDatasheet:
    return load_datasheet("SiRA04DP")


@pytest.fixture
def pmos() -> MosfetDatasheet:
    return load_datasheet("SiA469DJ")


@pytest.fixture
def drive() -> GateDrive:
    return GateDrive(r_gext=10.0)


@pytest.fixture
def make_ds():
    """Factory for synthetic NMOS datasheets with an explicit k."""
    def _make(**overrides) -> MosfetDatasheet:
        fields = dict(
            name="synthetic", polarity="NMOS", r_g=0.0,
            c_iss_at_0v=1e-9, c_iss_at_vds=1e-9,
            v_th=1.0, v_gp=1.5, k=1.0,
        )
        fields.update(overrides)
        return MosfetDatasheet(**fields)
    return _make
