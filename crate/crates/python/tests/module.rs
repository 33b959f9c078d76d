use pyo3::prelude::*;
use pyo3::types::PyDict;

fn with_module<F: FnOnce(Python<'_>, &Bound<'_, PyDict>)>(f: F) {
    Python::initialize();
    Python::attach(|py| {
        let m = PyModule::new(py, "sln_ext").unwrap();
        sln_ext_py::sln_ext_module(&m).unwrap();
        let globals = PyDict::new(py);
        globals.set_item("sln_ext", m).unwrap();
        f(py, &globals);
    });
}

#[test]
fn tables_from_python() {
    with_module(|py, g| {
        py.run(
            c"
t = sln_ext.theorem2_table(2)
assert t.dims == [[1, 0], [0, 1]], t.dims
assert t.case == 'ramified' and t.provenance == 'closed-form'
assert sln_ext.euler_poincare(t, 1) == -1
assert sln_ext.theorem2_table(4, 'unramified', oracle=True).dims[2] == [1, 1, 0, 1]
assert sln_ext.ramanujan_sum(4, 2) == -2
assert sln_ext.theorem1_ext1(True) == [[0, 1], [1, 0]]
assert sln_ext.verify(5)['ok']
",
            Some(g),
            None,
        )
        .unwrap();
    });
}

#[test]
fn objects_and_errors() {
    with_module(|py, g| {
        py.run(
            c"
from fractions import Fraction
z = sln_ext.CycNum.zeta(5)
assert (z * z.inv()).is_one()
assert z.pow(5) == sln_ext.CycNum.from_int(5, 1)
a = sln_ext.CycNum(3, [1, '1/2'])
assert a.coeffs() == [Fraction(1), Fraction(1, 2)]
assert (a / a).is_one()
L = sln_ext.LatticeRep.standard_a(4)
assert L.rank == 3 and L.dual().dual() == L
assert sln_ext.isotypic_vector(L, 2) == [1, 1, 0, 1]
assert sln_ext.ext_transfer(3, 1, 1) == [1, 0, 1]
assert sln_ext.orbit_stabilizer(4)['orbit_size'] == 6
sign = sln_ext.LatticeRep([[-1]], 2)
assert sln_ext.conjecture_table(sign).dims == [[1, 0], [0, 1]]
for bad in (lambda: sln_ext.theorem2_table(1),
            lambda: sln_ext.theorem1_ext1(True, normalizer_trivial=True),
            lambda: sln_ext.CycNum(3, [1.5, 0]),
            lambda: sln_ext.CycNum.zeta(3) + sln_ext.CycNum.zeta(4),
            lambda: sln_ext.LatticeRep([[1, 1], [0, 1]], 2)):
    try:
        bad()
    except ValueError:
        pass
    else:
        raise AssertionError('expected ValueError')
",
            Some(g),
            None,
        )
        .unwrap();
    });
}
