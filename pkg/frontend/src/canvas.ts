import { cullToViewport, hitTest, type RenderModel, type RenderNode } from "./render-model.js";

const PHASE_FILL: Record<string, string> = {
  active: "#2f6fdb",
  passive: "#7fa8e0",
  new: "#c9d8f0",
  placeholder: "#e4e4e4",
};
const PHASE_TEXT: Record<string, string> = {
  active: "#ffffff",
  passive: "#10243f",
  new: "#10243f",
  placeholder: "#555555",
};
const HIGHLIGHT = "#e8a02e";
const SELECTED = "#c0392b";

interface Camera {
  offsetX: number;
  offsetY: number;
  scale: number;
}

/** Pan/zoom canvas. Only paints nodes inside the viewport so graphs with
 *  thousands of clauses stay responsive. */
export class GraphCanvas {
  private camera: Camera = { offsetX: 0, offsetY: 0, scale: 1 };
  private model: RenderModel = { nodes: [], edges: [], width: 0, height: 0 };
  private dragging = false;
  private lastPointer = { x: 0, y: 0 };
  private context: CanvasRenderingContext2D;

  onNodeClick: (node: RenderNode, additive: boolean) => void = () => {};
  onBackgroundClick: () => void = () => {};

  constructor(private canvas: HTMLCanvasElement) {
    const context = canvas.getContext("2d");
    if (!context) throw new Error("canvas 2d context unavailable");
    this.context = context;
    canvas.addEventListener("pointerdown", (event) => this.pointerDown(event));
    canvas.addEventListener("pointermove", (event) => this.pointerMove(event));
    canvas.addEventListener("pointerup", (event) => this.pointerUp(event));
    canvas.addEventListener("wheel", (event) => this.wheel(event), { passive: false });
    new ResizeObserver(() => this.resize()).observe(canvas);
    this.resize();
  }

  setModel(model: RenderModel): void {
    this.model = model;
    this.draw();
  }

  /** Center the camera on a node (used by search results and premise links). */
  panTo(id: number): void {
    const node = this.model.nodes.find((n) => n.id === id);
    if (!node) return;
    this.camera.offsetX = this.canvas.width / 2 - node.x * this.camera.scale;
    this.camera.offsetY = this.canvas.height / 2 - node.y * this.camera.scale;
    this.draw();
  }

  fit(): void {
    const { width, height } = this.model;
    const scaleX = this.canvas.width / (width + 400);
    const scaleY = this.canvas.height / (height + 300);
    this.camera.scale = Math.min(1, scaleX, scaleY);
    this.camera.offsetX = this.canvas.width / 2;
    this.camera.offsetY = 60;
    // layouts are centered around x = 0
    this.draw();
  }

  private resize(): void {
    const rect = this.canvas.getBoundingClientRect();
    this.canvas.width = Math.max(1, rect.width);
    this.canvas.height = Math.max(1, rect.height);
    this.draw();
  }

  private toWorld(clientX: number, clientY: number): { x: number; y: number } {
    const rect = this.canvas.getBoundingClientRect();
    return {
      x: (clientX - rect.left - this.camera.offsetX) / this.camera.scale,
      y: (clientY - rect.top - this.camera.offsetY) / this.camera.scale,
    };
  }

  private pointerDown(event: PointerEvent): void {
    this.dragging = true;
    this.lastPointer = { x: event.clientX, y: event.clientY };
    this.canvas.setPointerCapture(event.pointerId);
  }

  private pointerMove(event: PointerEvent): void {
    if (!this.dragging) return;
    this.camera.offsetX += event.clientX - this.lastPointer.x;
    this.camera.offsetY += event.clientY - this.lastPointer.y;
    this.lastPointer = { x: event.clientX, y: event.clientY };
    this.draw();
  }

  private pointerUp(event: PointerEvent): void {
    this.dragging = false;
    const moved =
      Math.abs(event.clientX - this.lastPointer.x) +
      Math.abs(event.clientY - this.lastPointer.y);
    if (moved > 4) return;
    const world = this.toWorld(event.clientX, event.clientY);
    const node = hitTest(this.model.nodes, world.x, world.y, 70 / this.camera.scale);
    if (node) {
      this.onNodeClick(node, event.ctrlKey || event.metaKey || event.shiftKey);
    } else {
      this.onBackgroundClick();
    }
  }

  private wheel(event: WheelEvent): void {
    event.preventDefault();
    const factor = event.deltaY < 0 ? 1.15 : 1 / 1.15;
    const next = Math.min(4, Math.max(0.05, this.camera.scale * factor));
    const rect = this.canvas.getBoundingClientRect();
    const cx = event.clientX - rect.left;
    const cy = event.clientY - rect.top;
    // zoom about the cursor
    this.camera.offsetX = cx - ((cx - this.camera.offsetX) / this.camera.scale) * next;
    this.camera.offsetY = cy - ((cy - this.camera.offsetY) / this.camera.scale) * next;
    this.camera.scale = next;
    this.draw();
  }

  draw(): void {
    const ctx = this.context;
    const { width, height } = this.canvas;
    ctx.clearRect(0, 0, width, height);
    if (this.model.nodes.length === 0) {
      ctx.fillStyle = "#8a97a5";
      ctx.font = "14px system-ui, sans-serif";
      ctx.textAlign = "center";
      ctx.fillText("no clauses", width / 2, height / 2);
      return;
    }
    ctx.save();
    ctx.translate(this.camera.offsetX, this.camera.offsetY);
    ctx.scale(this.camera.scale, this.camera.scale);

    const viewport = {
      x: -this.camera.offsetX / this.camera.scale,
      y: -this.camera.offsetY / this.camera.scale,
      width: width / this.camera.scale,
      height: height / this.camera.scale,
    };

    ctx.strokeStyle = "#9aa7b5";
    ctx.lineWidth = 1.2 / this.camera.scale;
    ctx.beginPath();
    for (const edge of this.model.edges) {
      ctx.moveTo(edge.from.x, edge.from.y);
      ctx.lineTo(edge.to.x, edge.to.y);
    }
    ctx.stroke();

    const nodes = cullToViewport(this.model.nodes, viewport);
    ctx.font = "13px system-ui, sans-serif";
    ctx.textAlign = "center";
    ctx.textBaseline = "middle";
    for (const node of nodes) {
      const label = this.camera.scale > 0.35 ? node.label : `${node.id}`;
      const textWidth = ctx.measureText(label).width;
      const w = Math.max(60, textWidth + 18);
      const h = 28;
      ctx.fillStyle = PHASE_FILL[node.phase];
      ctx.strokeStyle = node.selected ? SELECTED : node.highlighted ? HIGHLIGHT : "#5b6b7c";
      ctx.lineWidth = (node.selected || node.highlighted ? 3.5 : 1.2) / this.camera.scale;
      roundedRect(ctx, node.x - w / 2, node.y - h / 2, w, h, 6);
      ctx.fill();
      ctx.stroke();
      ctx.fillStyle = PHASE_TEXT[node.phase];
      ctx.fillText(label, node.x, node.y);
    }
    ctx.restore();
  }
}

function roundedRect(
  ctx: CanvasRenderingContext2D,
  x: number,
  y: number,
  w: number,
  h: number,
  r: number,
): void {
  ctx.beginPath();
  ctx.moveTo(x + r, y);
  ctx.arcTo(x + w, y, x + w, y + h, r);
  ctx.arcTo(x + w, y + h, x, y + h, r);
  ctx.arcTo(x, y + h, x, y, r);
  ctx.arcTo(x, y, x + w, y, r);
  ctx.closePath();
}
