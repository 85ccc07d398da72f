"""Serve a topic map to the browser explorer.

The server is plain stdlib HTTP: it hands out the map JSON at /api/map,
answers neighborhood and compound queries against the trained model, and
serves the bundled explorer page at /. This demo trains on the synthetic
three-theme corpus, saves both artifacts to /tmp, and blocks serving
them until interrupted.

While it runs, try:

    curl http://127.0.0.1:8787/api/map
    curl "http://127.0.0.1:8787/api/neighbors/oven?k=5&depth=2"
    curl "http://127.0.0.1:8787/api/compound?terms=orbit,comet"

or open http://127.0.0.1:8787/ in a browser.

Run:  python3 demos/03_serve_explorer.py
"""

import importlib
from pathlib import Path

from topicmap import (
    MapParams, TrainParams, build_map, create_server, save_map, save_model,
    train,
)

demo01 = importlib.import_module("01_train_and_query")

MAP_PATH = Path("/tmp/demo-topic-map.json")
MODEL_PATH = Path("/tmp/demo-model.txt")


def main() -> None:
    docs = demo01.make_corpus()
    params = TrainParams(
        vector_size=48, context_size=5, epochs=5, min_count=5,
        subsample_t=0.0, seed=42, workers=1,
    )
    model = train(docs, params)
    save_model(model, MODEL_PATH)

    topic_map = build_map(
        docs,
        train_params=params,
        map_params=MapParams(n_terms=26, percentile=0.9, cap=6,
                             base_percentile=0.8),
        model=model,
        phrases=False,
    )
    save_map(topic_map, MAP_PATH)

    server = create_server(port=8787, map_path=MAP_PATH, model_path=MODEL_PATH)
    host, port = server.server_address[:2]
    print(f"serving {MAP_PATH} on http://{host}:{port}/  (Ctrl-C to stop)")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        print("\nstopped")
    finally:
        server.server_close()


if __name__ == "__main__":
    main()
