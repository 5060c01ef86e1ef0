use std::fs;
use std::io::{Read, Write};
use std::net::{SocketAddr, TcpListener, TcpStream};
use std::path::Path;
use std::process::Command;

use wordsig::significance::{export_plane, BinSummary, ExplorerMeta, WordStat};
use wordsig_cli::server::{Server, FALLBACK_PAGE};

fn explorer_file(path: &Path) -> Vec<u8> {
    let stats = vec![
        WordStat {
            term: "brane".into(),
            tf: 40,
            v: 2.25,
            pos: Some("NN".into()),
        },
        WordStat {
            term: "the".into(),
            tf: 900,
            v: 0.75,
            pos: None,
        },
    ];
    let bins = vec![BinSummary {
        k: 6,
        lo: 32,
        hi: 63,
        members: 1,
        mean_v: 2.25,
    }];
    let meta = ExplorerMeta {
        corpus_name: "toy".into(),
        dim: 4,
        total_tokens: 940,
        mean_vec_len: 0.5,
        min_tf: 1,
    };
    let mut out = Vec::new();
    export_plane(&stats, &bins, meta, &mut out).unwrap();
    fs::write(path, &out).unwrap();
    out
}

/// Minimal HTTP/1.1 GET returning (status, content type, body).
fn get(addr: SocketAddr, path: &str) -> (u16, String, Vec<u8>) {
    let mut stream = TcpStream::connect(addr).unwrap();
    write!(
        stream,
        "GET {path} HTTP/1.1\r\nHost: localhost\r\nConnection: close\r\n\r\n"
    )
    .unwrap();
    let mut raw = Vec::new();
    stream.read_to_end(&mut raw).unwrap();
    let split = raw.windows(4).position(|w| w == b"\r\n\r\n").unwrap();
    let head = String::from_utf8(raw[..split].to_vec()).unwrap();
    let body = raw[split + 4..].to_vec();
    let status = head.split(' ').nth(1).unwrap().parse().unwrap();
    let content_type = head
        .lines()
        .find_map(|l| {
            l.to_ascii_lowercase()
                .strip_prefix("content-type: ")
                .map(str::to_owned)
        })
        .unwrap_or_default();
    (status, content_type, body)
}

#[test]
fn serves_data_and_assets() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("explorer.json");
    let bytes = explorer_file(&data);
    let assets = dir.path().join("www");
    fs::create_dir_all(assets.join("js")).unwrap();
    fs::write(assets.join("js/app.js"), "console.log(1);").unwrap();
    fs::write(dir.path().join("secret.txt"), "hidden").unwrap();

    let rt = tokio::runtime::Runtime::new().unwrap();
    let server = rt
        .block_on(Server::bind(
            &data,
            "127.0.0.1:0".parse().unwrap(),
            Some(assets),
        ))
        .unwrap();
    let addr = server.local_addr().unwrap();
    let (stop, stopped) = tokio::sync::oneshot::channel::<()>();
    let handle = rt.spawn(server.run(async {
        let _ = stopped.await;
    }));

    let (status, ctype, body) = get(addr, "/data");
    assert_eq!(status, 200);
    assert_eq!(ctype, "application/json");
    assert_eq!(body, bytes);

    let (status, ctype, body) = get(addr, "/");
    assert_eq!(status, 200);
    assert!(ctype.starts_with("text/html"));
    assert_eq!(body, FALLBACK_PAGE.as_bytes());

    let (status, ctype, body) = get(addr, "/assets/js/app.js");
    assert_eq!((status, ctype.as_str()), (200, "text/javascript"));
    assert_eq!(body, b"console.log(1);");

    assert_eq!(get(addr, "/assets/missing.css").0, 404);
    assert_eq!(get(addr, "/assets/../secret.txt").0, 404);
    assert_eq!(get(addr, "/assets/%2e%2e/secret.txt").0, 404);

    stop.send(()).unwrap();
    rt.block_on(handle).unwrap().unwrap();
}

#[test]
fn occupied_port_fails_to_start() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("explorer.json");
    explorer_file(&data);
    let busy = TcpListener::bind("127.0.0.1:0").unwrap();
    let port = busy.local_addr().unwrap().port().to_string();
    let out = Command::new(env!("CARGO_BIN_EXE_wordsig"))
        .args(["serve", data.to_str().unwrap(), "--port", &port])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("cannot listen"), "{err}");
}

#[test]
fn truncated_data_file_is_refused() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("explorer.json");
    let bytes = explorer_file(&data);
    fs::write(&data, &bytes[..bytes.len() / 2]).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_wordsig"))
        .args(["serve", data.to_str().unwrap(), "--port", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 1") && err.contains("column"), "{err}");
}
