//! The cap is process-wide state, so these run in their own test binary.

use entwined::algcore::Bimodule;
use entwined::exactlin::Rationals;
use entwined::homology::*;
use entwined::zoo::{group_algebra, GroupPresentation};
use entwined::Error;

#[test]
fn cap_refuses_large_degrees_and_can_be_lifted() {
    let a = group_algebra(&GroupPresentation::cyclic(4), Rationals).unwrap();
    assert_eq!(resource_cap(), DEFAULT_RESOURCE_CAP);

    set_resource_cap(100);
    // degree 1 of the bar resolution has 4³ = 64 entries, degree 2 has 256
    assert!(bar_resolution(&a, 1).is_ok());
    assert_eq!(
        bar_resolution(&a, 2).unwrap_err(),
        Error::ResourceCap { degree: 2, dim: 256, cap: 100 }
    );
    let m = Bimodule::free(&a, 2);
    // cochains in degree 1: 4 generators × 32
    set_resource_cap(64);
    let bar = bar_resolution(&a, 1).unwrap();
    assert!(matches!(hom_free(&bar, &m), Err(Error::ResourceCap { degree: 1, .. })));

    set_resource_cap(0);
    assert!(bar_resolution(&a, 2).is_ok());
}
