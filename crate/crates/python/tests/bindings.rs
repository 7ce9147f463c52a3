use boole_qudit::boole_qudit;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn with_module<R>(f: impl FnOnce(&Bound<'_, PyDict>) -> R) -> R {
    static INIT: std::sync::Once = std::sync::Once::new();
    INIT.call_once(|| {
        pyo3::append_to_inittab!(boole_qudit);
        Python::initialize();
    });
    Python::attach(|py| {
        let globals = PyDict::new(py);
        globals
            .set_item("bq", py.import("boole_qudit").unwrap())
            .unwrap();
        f(&globals)
    })
}

fn eval(code: &str) -> String {
    with_module(|g| {
        let code = std::ffi::CString::new(code).unwrap();
        g.py()
            .eval(&code, Some(g), None)
            .unwrap()
            .str()
            .unwrap()
            .to_string()
    })
}

#[test]
fn exact_values_cross_the_boundary() {
    assert_eq!(eval("str(bq.lagrange_component(3, 1))"), "-x^2 + 2*x");
    assert_eq!(eval("str(bq.basis_ket(3, 2))"), "(0, 0, 1)");
    assert_eq!(
        eval("str(bq.Amplitude('1/2s2') * bq.Amplitude.sqrt2())"),
        "1"
    );
    assert_eq!(
        eval("bq.bell_state(1, 0) == bq.bell_closed_form(1, 0)"),
        "True"
    );
    assert_eq!(eval("bq.verify(4)['overall']"), "True");
    assert_eq!(
        eval("[str(a) for a in bq.superpose(2, ['3/5', '4/5i']).amplitudes()]"),
        "['3/5', '4/5i']"
    );
}

#[test]
fn range_errors_raise_value_error() {
    let raised = with_module(|g| {
        let code = std::ffi::CString::new("bq.basis_ket(3, 5)").unwrap();
        let err = g.py().eval(&code, Some(g), None).unwrap_err();
        err.is_instance_of::<pyo3::exceptions::PyValueError>(g.py())
    });
    assert!(raised);
}
