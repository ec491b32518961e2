//! Writes every built-in instance to `catalog/` as JSON.

use std::path::Path;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("catalog");
    std::fs::create_dir_all(&dir)?;
    for (id, _) in multifold::catalog::IDS {
        for (name, contents) in multifold::catalog::json_files(id)? {
            std::fs::write(dir.join(&name), contents)?;
            println!("wrote catalog/{name}");
        }
    }
    Ok(())
}
