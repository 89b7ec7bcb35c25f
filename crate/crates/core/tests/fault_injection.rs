use tensorwalk_core::regress::{check_all, check_names, CheckOptions, Status};

fn only(names: &[&str], corrupt: Option<&str>) -> CheckOptions {
    CheckOptions { only: names.iter().map(|s| s.to_string()).collect(), corrupt: corrupt.map(str::to_string) }
}

#[test]
fn each_corrupted_fixture_fails_its_own_check() {
    for (name, _) in check_names() {
        let r = check_all(&only(&[name], Some(name)));
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].status, Status::Fail, "corrupting {name} went unnoticed");
        assert!(!r[0].details.is_empty());
    }
}

#[test]
fn corruption_does_not_leak_into_other_checks() {
    let names = ["examples", "octant", "quadrant", "rect"];
    let r = check_all(&only(&names, Some("quadrant")));
    let failed: Vec<_> = r.iter().filter(|r| r.status == Status::Fail).map(|r| r.name).collect();
    assert_eq!(failed, ["quadrant"]);
}

#[test]
fn filter_and_ordering() {
    let r = check_all(&only(&["t3rec", "closedform"], None));
    let names: Vec<_> = r.iter().map(|r| r.name).collect();
    assert_eq!(names, ["closedform", "t3rec"]);
    assert!(r.iter().all(|r| r.status == Status::Pass));
    assert!(check_all(&only(&["nonexistent"], None)).is_empty());
}

#[test]
fn reports_are_deterministic() {
    let opts = only(&["examples", "oracles"], None);
    assert_eq!(check_all(&opts), check_all(&opts));
}
