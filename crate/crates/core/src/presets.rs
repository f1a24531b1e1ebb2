//! Bundled words and schematics, addressable by name.

use crate::cdisk::CDiskSchematic;
use crate::dsl::{parse_schematic, parse_word};
use crate::morse::MorseWord;

#[derive(Clone, Copy, Debug)]
pub struct WordPreset {
    pub name: &'static str,
    pub text: &'static str,
    pub expected_width: usize,
    pub note: &'static str,
}

#[derive(Clone, Copy, Debug)]
pub struct SchematicPreset {
    pub name: &'static str,
    pub text: &'static str,
    pub note: &'static str,
}

impl WordPreset {
    pub fn word(&self) -> MorseWord {
        parse_word(self.text).expect("bundled preset parses")
    }
}

impl SchematicPreset {
    pub fn schematic(&self) -> CDiskSchematic {
        parse_schematic(self.text).expect("bundled preset parses")
    }
}

pub const WORDS: &[WordPreset] = &[
    WordPreset {
        name: "unknot",
        text: "link\ncup 0\ncap 0\n",
        expected_width: 2,
        note: "one minimum, one maximum",
    },
    WordPreset {
        name: "unlink-nested",
        text: "link\ncup 0\ncup 2\ncap 0\ncap 0\n",
        expected_width: 8,
        note: "two unknots with both minima below both maxima",
    },
    WordPreset {
        name: "unlink-split",
        text: "link\ncup 0\ncap 0\ncup 0\ncap 0\n",
        expected_width: 4,
        note: "two unknots stacked; thin",
    },
    WordPreset {
        name: "trefoil-plat",
        text: "link\ncup 0\ncup 2\nx+ 1\nx+ 1\nx+ 1\ncap 0\ncap 0\n",
        expected_width: 8,
        note: "plat closure of a three-crossing braid on the middle strands",
    },
    WordPreset {
        name: "figure-eight-plat",
        text: "link\ncup 0\ncup 2\nx+ 1\nx+ 1\nx- 0\nx+ 1\ncap 2\ncap 0\n",
        expected_width: 8,
        note: "two-bridge plat with alternating crossing signs",
    },
    WordPreset {
        name: "stacked",
        text: "link\ncup 0\ncup 2\ncap 1\ncup 1\ncap 1\ncap 0\n",
        expected_width: 14,
        note: "two braid boxes separated by a thin level of width 2",
    },
];

pub const SCHEMATICS: &[SchematicPreset] = &[
    SchematicPreset {
        name: "cdisk-clean",
        text: "cdisk compress\nbase alpha=2 beta=2\ninside=beta\n\
               min alpha\nmax alpha\nmax alpha\nmin beta\nmax beta\nmax beta\n",
        note: "all inequalities strict; no certificate",
    },
    SchematicPreset {
        name: "cdisk-fact1",
        text: "cdisk compress\nbase alpha=0 beta=2\ninside=beta\n\
               min alpha\nmax alpha\nmin beta\nmax beta\nmax beta\n",
        note: "beta region pushes down past a balanced alpha region: width drops by 4",
    },
    SchematicPreset {
        name: "cdisk-fact4",
        text: "cdisk cut\nbase alpha=1 beta=3\ninside=beta\n\
               min beta\nmax beta\ntransfer\nmin alpha\nmax alpha\nmax alpha tau\n\
               min beta\nmax beta\nmax beta\n",
        note: "first tau maximum in region r; Fact 4 move has delta 0",
    },
];

pub fn word_preset(name: &str) -> Option<&'static WordPreset> {
    WORDS.iter().find(|p| p.name == name)
}

pub fn schematic_preset(name: &str) -> Option<&'static SchematicPreset> {
    SCHEMATICS.iter().find(|p| p.name == name)
}
