use pyo3::prelude::*;
use pyo3::types::PyDict;

fn with_module<F: FnOnce(Python<'_>, &Bound<'_, PyDict>)>(f: F) {
    Python::initialize();
    Python::attach(|py| {
        let m = pyo3::wrap_pymodule!(berkdyn_py::berkdyn_py)(py);
        let g = PyDict::new(py);
        g.set_item("b", m).unwrap();
        f(py, &g);
    });
}

#[test]
fn map_methods() {
    with_module(|py, g| {
        py.run(
            c"m = b.RationalMap(2, ['0', '0', '1/2'], ['1'])
assert m.degree == 2 and m.p == 2
assert m.ord_res() == 2
assert m.ord_res_at('disk:0:1') == '0'
loc = m.min_res_loc()
assert loc['ends'] == ['disk:0:1'] and loc['value'] == '0'
cm = m.crucial_measure(2)
assert cm['complete'] and cm['atoms'] == [('disk:0:1', 3, '1')]
assert m.lyapunov(1) == '-1'
assert m.iterate(2).degree == 4
assert b.RationalMap(2, ['1/2', '0', '1'], ['1']).crucial_measure(1)['complete'] is False
",
            Some(g),
            None,
        )
        .unwrap();
    });
}

#[test]
fn errors_and_cli() {
    with_module(|py, g| {
        py.run(
            c"try:
    b.RationalMap(4, ['0', '0', '1'], ['1'])
    raise AssertionError('accepted p = 4')
except ValueError as e:
    assert 'NotPrime' in str(e)
code, out, err = b.run_cli(['lyapunov', '--p', '2', '--num', '0,0,1'])
assert code == 0 and '\"estimate\": \"-1\"' in out
assert b.run_cli(['crucial', '--p', '2', '--num', '1,2'])[0] == 3
",
            Some(g),
            None,
        )
        .unwrap();
    });
}
