//! Static HTTP server for the explorer: `GET /`, `GET /data` and
//! `GET /assets/*`.

use std::future::Future;
use std::net::SocketAddr;
use std::path::{Component, Path, PathBuf};
use std::sync::Arc;

use anyhow::{Context, Result};
use axum::body::Bytes;
use axum::extract::{Path as UrlPath, State};
use axum::http::{header, StatusCode};
use axum::response::{Html, IntoResponse, Response};
use axum::routing::get;
use axum::Router;
use log::info;
use tokio::net::TcpListener;
use wordsig::significance::parse_explorer_data;

/// Page served at `/` when no asset directory provides an `index.html`.
pub const FALLBACK_PAGE: &str = include_str!("../assets/index.html");

struct Shared {
    data: Bytes,
    assets: Option<PathBuf>,
}

pub struct Server {
    listener: TcpListener,
    app: Router,
}

impl Server {
    /// Validates the data file and binds `addr`. A data file that does not
    /// parse is refused with the position of the error.
    pub async fn bind(data: &Path, addr: SocketAddr, assets: Option<PathBuf>) -> Result<Self> {
        let bytes = tokio::fs::read(data)
            .await
            .with_context(|| format!("cannot read {}", data.display()))?;
        let parsed = parse_explorer_data(bytes.as_slice())
            .with_context(|| format!("malformed explorer data file {}", data.display()))?;
        info!(
            "{}: {} words, {} bins",
            data.display(),
            parsed.words.len(),
            parsed.bins.len()
        );
        if let Some(dir) = &assets {
            anyhow::ensure!(dir.is_dir(), "asset directory {} not found", dir.display());
        }
        let listener = TcpListener::bind(addr)
            .await
            .with_context(|| format!("cannot listen on {addr}"))?;
        let shared = Arc::new(Shared {
            data: Bytes::from(bytes),
            assets,
        });
        let app = Router::new()
            .route("/", get(index))
            .route("/data", get(data_file))
            .route("/assets/{*path}", get(asset))
            .with_state(shared);
        Ok(Server { listener, app })
    }

    pub fn local_addr(&self) -> Result<SocketAddr> {
        Ok(self.listener.local_addr()?)
    }

    /// Serves requests until `shutdown` completes.
    pub async fn run(self, shutdown: impl Future<Output = ()> + Send + 'static) -> Result<()> {
        axum::serve(self.listener, self.app)
            .with_graceful_shutdown(shutdown)
            .await?;
        Ok(())
    }
}

async fn index(State(shared): State<Arc<Shared>>) -> Response {
    if let Some(dir) = &shared.assets {
        if let Ok(page) = tokio::fs::read(dir.join("index.html")).await {
            return ([(header::CONTENT_TYPE, "text/html; charset=utf-8")], page).into_response();
        }
    }
    Html(FALLBACK_PAGE).into_response()
}

async fn data_file(State(shared): State<Arc<Shared>>) -> Response {
    (
        [(header::CONTENT_TYPE, "application/json")],
        shared.data.clone(),
    )
        .into_response()
}

async fn asset(State(shared): State<Arc<Shared>>, UrlPath(path): UrlPath<String>) -> Response {
    let Some(dir) = &shared.assets else {
        return StatusCode::NOT_FOUND.into_response();
    };
    let rel = Path::new(&path);
    if !rel.components().all(|c| matches!(c, Component::Normal(_))) {
        return StatusCode::NOT_FOUND.into_response();
    }
    match tokio::fs::read(dir.join(rel)).await {
        Ok(body) => ([(header::CONTENT_TYPE, content_type(rel))], body).into_response(),
        Err(_) => StatusCode::NOT_FOUND.into_response(),
    }
}

fn content_type(path: &Path) -> &'static str {
    match path.extension().and_then(|e| e.to_str()) {
        Some("html") => "text/html; charset=utf-8",
        Some("js" | "mjs") => "text/javascript",
        Some("css") => "text/css",
        Some("json") => "application/json",
        Some("wasm") => "application/wasm",
        Some("svg") => "image/svg+xml",
        Some("png") => "image/png",
        _ => "application/octet-stream",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn content_types() {
        assert_eq!(content_type(Path::new("a/b.js")), "text/javascript");
        assert_eq!(content_type(Path::new("x.wasm")), "application/wasm");
        assert_eq!(
            content_type(Path::new("README")),
            "application/octet-stream"
        );
    }
}
