//! Words and intertwined matchings, and splitting a perfect matching into
//! intertwined pieces.

use matchposet::matching::{decompose_intertwined, matching_to_word, word_to_matching, Matching};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for word in [[2, 1, 3], [3, 1, 2]] {
        let m = word_to_matching(&word)?;
        println!("word {word:?} <-> {m}");
        assert_eq!(matching_to_word(&m)?, word);
    }

    let m: Matching = "1-5 2-3 4-8 6-7".parse()?;
    println!("\n{m} splits into:");
    for piece in decompose_intertwined(&m)? {
        let word = matching_to_word(&piece.standardized())?;
        println!("  {piece}  (word {word:?})");
    }
    Ok(())
}
