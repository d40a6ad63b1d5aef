//! Bundled example posets and Greechie diagrams.

use crate::error::{Error, Result};
use crate::format;
use crate::poset::FinitePoset;

macro_rules! corpus_files {
    ($($name:literal => $ext:literal),* $(,)?) => {
        const FILES: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../corpus/", $name, ".", $ext)))),*
        ];
    };
}

corpus_files! {
    "fig1a" => "poset",
    "fig1b" => "poset",
    "fig2" => "poset",
    "chain2" => "poset",
    "chain3" => "poset",
    "ba4" => "poset",
    "ba8" => "poset",
    "ba16" => "poset",
    "mo2" => "poset",
    "mo3" => "poset",
    "o6" => "poset",
    "m3" => "poset",
    "n5" => "poset",
    "bowtie" => "poset",
    "fig3" => "greechie",
    "twoblock" => "greechie",
}

pub const POSET_NAMES: &[&str] = &[
    "fig1a", "fig1b", "fig2", "chain2", "chain3", "ba4", "ba8", "ba16", "mo2", "mo3", "o6", "m3",
    "n5", "bowtie",
];

pub const GREECHIE_NAMES: &[&str] = &["fig3", "twoblock"];

/// SHA-256 of each bundled file; a change to any figure must be deliberate.
pub const DIGESTS: &[(&str, &str)] = &[
    (
        "fig1a",
        "65b3f71e4ad4b90937a474c9bcdb800534a47dda631674f89a766d791d42d214",
    ),
    (
        "fig1b",
        "39b95bfc1bd5b8a0e4dfdfae0dead071fa07d544947a00b884f13c2d57e4a375",
    ),
    (
        "fig2",
        "25f71e0c54ca1cb3c59cf766c5b06053a387e5682bc94dce274776edf6bca88f",
    ),
    (
        "chain2",
        "d6574cb0f909b29d84040d8e2e8c256e77decfccd284500e4f7219deb7321107",
    ),
    (
        "chain3",
        "d764d5be71d8187a02167015f35c15cc852391865048bd196a6056e95177f161",
    ),
    (
        "ba4",
        "a330ce3a4282b9bf893ce18fa582e11206dceae4ab11d86ad321df52a20861fa",
    ),
    (
        "ba8",
        "bfaf94278a3f5f52aa98aa8012f4f6c07bf5dc07b3b12ea41d8e4e6bf0ac96ae",
    ),
    (
        "ba16",
        "4dc5e85fb627d5d41358e6423482810acca756b501bea362310948a25fd19266",
    ),
    (
        "mo2",
        "7b3e72b968aa5b70d82ed8c75606e7751030dc97df93fcae44b340ed31238ed2",
    ),
    (
        "mo3",
        "7cc556dcd1fa255b8e409b2ebcdd51402934662106f17eea0124b85f0561be81",
    ),
    (
        "o6",
        "bac7ed485cd6b53bbd01514ed441136fe8d3e3eade8b9b7f4f0403bdc1cfc359",
    ),
    (
        "m3",
        "b0a875ece55b32fe7ed18374c417562de17b062d7b16d5cd4f440c711b7925f9",
    ),
    (
        "n5",
        "f6ab7b3613e16417c7c19a734f3be7a2748a3f8ec1dcf09aa9401a04f91fcb4f",
    ),
    (
        "bowtie",
        "add9a83f5a02ba97ea824e166763a1665ea726f50d19588f306a56ac80c315e8",
    ),
    (
        "fig3",
        "3fb6318d25183a64f1d226430b7ccb365733f77f9716ceb3dfcb8e7cb73933d8",
    ),
    (
        "twoblock",
        "b4afd016f8c9ffdc83898a19696e8686e2b27b4559a9fcbe681dd566863afa30",
    ),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    FILES.iter().map(|(n, _)| *n)
}

pub fn text(name: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub fn is_greechie(name: &str) -> bool {
    GREECHIE_NAMES.contains(&name)
}

/// The poset for a corpus entry; Greechie diagrams are pasted.
pub fn poset(name: &str) -> Result<FinitePoset> {
    let text = text(name).ok_or_else(|| Error::UnknownElement(name.to_string()))?;
    if is_greechie(name) {
        format::parse_greechie(text)?.to_omp()
    } else {
        format::parse_poset(text)
    }
}

/// Recorded `expect:` verdicts of a corpus entry.
pub fn expectations(name: &str) -> Result<Vec<(String, bool)>> {
    let text = text(name).ok_or_else(|| Error::UnknownElement(name.to_string()))?;
    Ok(if is_greechie(name) {
        format::parse_greechie_document(text)?.expect
    } else {
        format::parse_poset_document(text)?.expect
    })
}

pub fn fig1a() -> FinitePoset {
    poset("fig1a").expect("bundled")
}

pub fn fig1b() -> FinitePoset {
    poset("fig1b").expect("bundled")
}

pub fn fig2() -> FinitePoset {
    poset("fig2").expect("bundled")
}

pub fn fig3() -> FinitePoset {
    poset("fig3").expect("bundled")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_file_parses() {
        for name in names() {
            poset(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        assert_eq!(names().count(), POSET_NAMES.len() + GREECHIE_NAMES.len());
    }

    #[test]
    fn digests_are_frozen() {
        assert_eq!(DIGESTS.len(), FILES.len());
        for (name, digest) in DIGESTS {
            assert_eq!(
                format::digest(text(name).unwrap()),
                *digest,
                "{name} changed"
            );
        }
    }

    #[test]
    fn figure_sizes() {
        assert_eq!(fig1a().len(), 14);
        assert_eq!(fig1b().len(), 12);
        assert_eq!(fig2().len(), 14);
        assert_eq!(fig3().len(), 18);
    }
}
