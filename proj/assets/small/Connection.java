abstract class Connection extends State {
  void log() {
    send("base");
  }
}
