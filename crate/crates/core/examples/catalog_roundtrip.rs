//! Writes each catalog entry to a file and reads it back.

use lck_lab::catalog::build;
use lck_lab::io::file::AlgebraDocument;
use lck_lab::CatalogKey;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("lck-lab-roundtrip");
    std::fs::create_dir_all(&dir)?;
    for key in CatalogKey::defaults() {
        let doc = AlgebraDocument::from(&build(&key)?);
        let path = dir.join(format!(
            "{}.toml",
            key.to_string().replace(['(', ')', ',', '/'], "_")
        ));
        std::fs::write(&path, doc.to_toml())?;
        let back = AlgebraDocument::from_toml(&std::fs::read_to_string(&path)?)?;
        assert_eq!(back, doc, "{key}");
        println!("{:<26} {}", key.to_string(), path.display());
    }
    Ok(())
}
