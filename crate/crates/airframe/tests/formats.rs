use std::sync::Arc;

use airframe::formats::*;
use airframe::AirframeError;
use airframe_core::systems::{airplane, airplane_generators, builtin, BUILTIN_NAMES};
use airframe_core::{Diagram, Expansion, GroupWord};
use proptest::prelude::*;

#[test]
fn builtin_systems_round_trip() {
    for name in BUILTIN_NAMES {
        let sys = builtin(name).unwrap();
        let text = system_to_json(&sys);
        assert_eq!(system_from_json(&text).unwrap(), *sys, "{name}");
    }
}

#[test]
fn system_file_layout() {
    let sys = airplane();
    let v: serde_json::Value = serde_json::from_str(&system_to_json(&sys)).unwrap();
    assert_eq!(v["colors"], serde_json::json!(["red", "blue"]));
    let e = &sys.base().edges[0];
    assert_eq!(v["base"]["edges"][0], serde_json::json!([e.name, e.src, e.tgt, "blue"]));
    assert!(v["rules"][0]["initial"].is_u64());
}

#[test]
fn broken_system_files() {
    let mut v: serde_json::Value = serde_json::from_str(&system_to_json(&airplane())).unwrap();
    v["base"]["edges"][0][3] = "green".into();
    assert!(matches!(system_from_json(&v.to_string()), Err(AirframeError::Format(_))));
    assert!(matches!(system_from_json("{"), Err(AirframeError::Json(_))));
}

#[test]
fn diagram_file_layout() {
    let t = airplane_generators();
    let d = t.get("d").unwrap();
    let v: serde_json::Value = serde_json::from_str(&diagram_to_json(d)).unwrap();
    assert_eq!(v["system"], "airplane");
    let entries = v["map"].as_array().unwrap();
    assert!(entries.iter().all(|e| e.as_array().unwrap().len() == 2 || e[2] == "reversed"));
    assert_eq!(v["domain"].as_array().unwrap().len(), entries.len());
}

#[test]
fn inconsistent_diagram_files() {
    let t = airplane_generators();
    let mut file = DiagramFile::from_diagram(t.get("a").unwrap());
    file.domain.pop();
    assert!(matches!(file.to_diagram(airplane()), Err(AirframeError::Format(_))));

    let mut file = DiagramFile::from_diagram(t.get("a").unwrap());
    file.map[0].push("sideways".into());
    assert!(file.to_diagram(airplane()).is_err());

    // a red edge sent onto a blue one
    let text = r#"{"system":"airplane","domain":["bL","bR","rT","rB"],"range":["bL","bR","rT","rB"],
        "map":[["bL","rT"],["bR","bR"],["rT","bL"],["rB","rB"]]}"#;
    assert!(matches!(diagram_from_json(text), Err(AirframeError::Core(_))));
    let text = text.replace("\"airplane\"", "\"no-such-system\"");
    assert!(matches!(diagram_from_json(&text), Err(AirframeError::UnknownSystem(_))));
}

#[test]
fn systems_from_the_search_path() {
    let dir = std::env::temp_dir().join(format!("airframe-formats-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let mut file = SystemFile::from_system(&airplane());
    file.name = "my-airplane".into();
    std::fs::write(dir.join("my-airplane.json"), serde_json::to_string(&file).unwrap()).unwrap();
    std::env::set_var(SYSTEM_PATH_VAR, &dir);
    let sys = resolve_system("my-airplane").unwrap();
    assert_eq!(sys.name(), "my-airplane");
    let direct = resolve_system(dir.join("my-airplane.json").to_str().unwrap()).unwrap();
    assert_eq!(direct, sys);
    assert!(matches!(resolve_system("missing"), Err(AirframeError::UnknownSystem(_))));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn dot_export() {
    let sys = airplane();
    let dot = expansion_to_dot(&sys, &Expansion::full(&sys, 1));
    assert!(dot.starts_with("digraph \"airplane\""));
    assert_eq!(dot.matches("->").count(), Expansion::full(&sys, 1).len());
    assert!(dot.contains("color=\"red\"") && dot.contains("color=\"blue\""));
    let f = airplane_generators().get("e").unwrap().clone();
    let dot = diagram_to_dot(&f);
    assert!(dot.contains("cluster_domain") && dot.contains("cluster_range"));
    assert_eq!(dot.matches("->").count(), 2 * f.len());
}

fn word_strategy() -> impl Strategy<Value = GroupWord> {
    prop::collection::vec((0usize..5, any::<bool>()), 0..=10).prop_map(|ls| {
        let mut w = GroupWord::new();
        for (i, pos) in ls {
            w.push(["a", "b", "g", "d", "e"][i], if pos { 1 } else { -1 });
        }
        w
    })
}

fn reload(f: &Diagram) -> Diagram {
    diagram_from_json(&diagram_to_json(f)).unwrap()
}

proptest! {
    #[test]
    fn emitted_diagrams_reload_equal(w in word_strategy(), k in 0usize..4) {
        let f = airplane_generators().evaluate(&w).unwrap();
        prop_assert_eq!(&reload(&f), &f);
        // unreduced diagrams too
        let mut g = f.clone();
        for _ in 0..k {
            let leaf = g.pairs().keys().last().unwrap().clone();
            g = g.expand_pair(&leaf).unwrap();
        }
        prop_assert_eq!(&reload(&g), &g);
        prop_assert!(Arc::ptr_eq(reload(&g).system(), reload(&g).system()) || reload(&g).system() == g.system());
    }
}
