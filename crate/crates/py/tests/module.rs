//! Loads the module into an embedded interpreter.

use pyo3::prelude::*;
use pyo3::types::PyModule;

fn with_module(body: impl FnOnce(&Bound<'_, PyModule>)) {
    Python::initialize();
    Python::attach(|py| {
        let m = PyModule::new(py, "dickson").unwrap();
        dickson::register(&m).unwrap();
        body(&m);
    });
}

#[test]
fn values_from_python() {
    with_module(|m| {
        let call = |name: &str, args: &str| -> String {
            let code = format!("import json\nresult = json.dumps(m.{name}({args}))");
            let locals = pyo3::types::PyDict::new(m.py());
            locals.set_item("m", m).unwrap();
            let code = std::ffi::CString::new(code).unwrap();
            m.py().run(&code, None, Some(&locals)).unwrap();
            locals.get_item("result").unwrap().unwrap().extract().unwrap()
        };
        assert_eq!(call("eval", "29, 5, 10"), "17");
        assert_eq!(call("poly", "7"), r#"["1", "0", "-7", "0", "14", "0", "-7", "0"]"#);
        assert_eq!(call("subset", "29, 'A2++'"), "[3, 7, 11, 18, 22, 26]");
        assert_eq!(call("cycles", "29, 5, 'A2--'"), r#""(0)(10 17 13 19 12 16)""#);
        assert_eq!(call("product", "7, 'T40--'"), "2");
        assert_eq!(call("sigma", "29, 'B2--', 4"), "14");
    });
}

#[test]
fn errors_become_value_errors() {
    with_module(|m| {
        let err = m.getattr("eval").unwrap().call1((12u64, 2u64, 1i64)).unwrap_err();
        assert!(err.is_instance_of::<pyo3::exceptions::PyValueError>(m.py()));
    });
}

#[test]
fn verify_returns_json_report() {
    with_module(|m| {
        let json: String = m
            .getattr("verify")
            .unwrap()
            .call1((3u64, 7u64, "odd", vec!["wilson_like".to_string()]))
            .unwrap()
            .extract()
            .unwrap();
        let report = dickson_core::report::Report::from_json(&json).unwrap();
        assert_eq!(report.verdicts.len(), 3);
        assert!(!report.has_failures());
    });
}
