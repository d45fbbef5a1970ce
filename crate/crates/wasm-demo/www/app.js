import init, { triangulation, tree, randomSubdivision, atlas } from "./pkg/positroid_wasm_demo.js";

const $ = (id) => document.getElementById(id);

function poly(c) {
  const terms = [];
  c.forEach((a, i) => {
    if (a === 0) return;
    const z = i === 0 ? "" : i === 1 ? "z" : `z^${i}`;
    terms.push(a === 1 && i > 0 ? z : `${a}${z}`);
  });
  return terms.length ? terms.join(" + ") : "0";
}

function guarded(errId, f) {
  $(errId).textContent = "";
  try {
    f();
  } catch (e) {
    $(errId).textContent = String(e.message ?? e);
  }
}

function table(el, head, rows) {
  el.innerHTML = "";
  const tr = el.insertRow();
  for (const h of head) {
    const th = document.createElement("th");
    th.textContent = h;
    tr.appendChild(th);
  }
  for (const r of rows) {
    const row = el.insertRow();
    for (const c of r) row.insertCell().textContent = c;
  }
}

// ---- triangulation graph

let triNodes = [];

function drawGraph(rep) {
  const cv = $("tri-canvas");
  const ctx = cv.getContext("2d");
  ctx.clearRect(0, 0, cv.width, cv.height);
  const layers = new Map();
  rep.labels.forEach((l, k) => {
    if (!layers.has(l.dist)) layers.set(l.dist, []);
    layers.get(l.dist).push(k);
  });
  const depth = layers.size;
  const pos = [];
  for (const [d, ks] of layers) {
    ks.forEach((k, idx) => {
      pos[k] = {
        x: ((idx + 1) * cv.width) / (ks.length + 1),
        y: 30 + (depth === 1 ? 0 : (d * (cv.height - 60)) / (depth - 1)),
      };
    });
  }
  const index = new Map(rep.labels.map((l, k) => [l.w, k]));
  ctx.strokeStyle = "#999";
  for (const e of rep.edges) {
    const a = pos[index.get(e.a)], b = pos[index.get(e.b)];
    ctx.beginPath();
    ctx.moveTo(a.x, a.y);
    ctx.lineTo(b.x, b.y);
    ctx.stroke();
  }
  ctx.font = "12px ui-monospace, monospace";
  ctx.textAlign = "center";
  triNodes = rep.labels.map((l, k) => ({ w: l.w, ...pos[k] }));
  rep.labels.forEach((l, k) => {
    const p = pos[k];
    const base = l.w === rep.w0;
    ctx.fillStyle = base ? "#ffd27a" : "#e8f0ff";
    ctx.strokeStyle = "#456";
    ctx.beginPath();
    ctx.roundRect(p.x - 30, p.y - 14, 60, 28, 6);
    ctx.fill();
    ctx.stroke();
    ctx.fillStyle = "#000";
    ctx.fillText(l.w, p.x, p.y - 1);
    ctx.fillStyle = "#a33";
    ctx.fillText(String(l.cover), p.x, p.y + 11);
  });
}

function runTriangulation() {
  guarded("tri-err", () => {
    const out = JSON.parse(triangulation($("tri-input").value, $("tri-w0").value));
    const t = out.triangulation;
    const m = out.methods;
    $("tri-w0").value = t.w0;
    const lines = [
      `positroid ${t.positroid.necklace}, rank ${t.positroid.rank}, decorated ${t.positroid.decorated}`,
      `${t.labels.length} simplices, ${t.edges.length} edges, base ${t.w0}`,
      ...Object.entries(m.hstar).map(([k, v]) => `h* (${k}) = ${poly(v)}`),
      `methods agree: ${m.verdict}; affine windows consistent: ${t.affineConsistent}`,
    ];
    $("tri-out").textContent = lines.join("\n");
    drawGraph(t);
    table(
      $("tri-table"),
      ["label", "dist", "cover", "window", "circuit"],
      t.labels.map((l) => [l.w, l.dist, l.cover, `[${l.window.join(",")}]`, l.circuit.join(" ")]),
    );
  });
}

$("tri-canvas").addEventListener("click", (ev) => {
  const r = ev.target.getBoundingClientRect();
  const x = ev.clientX - r.left, y = ev.clientY - r.top;
  const hit = triNodes.find((n) => Math.abs(n.x - x) < 30 && Math.abs(n.y - y) < 14);
  if (hit) {
    $("tri-w0").value = hit.w;
    runTriangulation();
  }
});

// ---- tree positroids

function drawSubdivision(sub) {
  const cv = $("tree-canvas");
  const ctx = cv.getContext("2d");
  ctx.clearRect(0, 0, cv.width, cv.height);
  const n = sub.n, R = 120, cx = cv.width / 2, cy = cv.height / 2;
  const pt = (v) => {
    const a = -Math.PI / 2 + (2 * Math.PI * (v - 1)) / n;
    return { x: cx + R * Math.cos(a), y: cy + R * Math.sin(a) };
  };
  for (const c of sub.cells) {
    ctx.beginPath();
    c.vertices.forEach((v, i) => {
      const p = pt(v);
      i ? ctx.lineTo(p.x, p.y) : ctx.moveTo(p.x, p.y);
    });
    ctx.closePath();
    ctx.fillStyle = c.color === "black" ? "#333" : "#fff";
    ctx.fill();
    ctx.strokeStyle = "#888";
    ctx.stroke();
  }
  ctx.font = "13px system-ui";
  ctx.textAlign = "center";
  ctx.fillStyle = "#05a";
  for (let v = 1; v <= n; v++) {
    const a = -Math.PI / 2 + (2 * Math.PI * (v - 1)) / n;
    ctx.fillText(String(v), cx + (R + 16) * Math.cos(a), cy + (R + 16) * Math.sin(a) + 4);
  }
}

function runTree() {
  guarded("tree-err", () => {
    const text = $("tree-input").value;
    const rep = JSON.parse(tree(text));
    drawSubdivision(JSON.parse(text));
    const facets = rep.arcs.filter((a) => a.facetDefining).map((a) => `${a.from}->${a.to} (area ${a.area})`);
    $("tree-out").textContent = [
      `type (${rep.k}, ${rep.n}), positroid ${rep.necklace}`,
      `chains ${rep.chains.map((c) => `(${c.join(",")})`).join(" ")}`,
      `facet-defining arcs ${facets.join(", ") || "none"}`,
      `circular extensions (${rep.extensions.length}): ${rep.extensions.join(" ")}`,
      `h* from the tree = ${poly(rep.hstarTree)}, from the necklace = ${poly(rep.hstarNecklace)}: ${rep.verdict}`,
    ].join("\n");
  });
}

$("tree-random").addEventListener("click", () =>
  guarded("tree-err", () => {
    const seed = Math.floor(Math.random() * 2 ** 32);
    const sub = JSON.parse(randomSubdivision(Number($("tree-n").value), seed));
    $("tree-input").value = JSON.stringify(sub);
    runTree();
  }),
);

// ---- atlas

function runAtlas() {
  guarded("atlas-err", () => {
    const rows = JSON.parse(atlas(Number($("atlas-r").value), Number($("atlas-n").value)));
    table(
      $("atlas-table"),
      ["necklace", "decorated", "simplices", "h*", "methods"],
      rows.map((r) => [r.necklace, r.decorated, r.labels ?? "-", poly(r.hstar), r.verdict]),
    );
  });
}

await init();
$("tri-run").addEventListener("click", runTriangulation);
$("tree-run").addEventListener("click", runTree);
$("atlas-run").addEventListener("click", runAtlas);
runTriangulation();
runTree();
runAtlas();
