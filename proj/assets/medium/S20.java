class S20 extends Abstract2 {
  void enter() {
    switch (event) {
      case EV313:
        switch (event) {
          case EV314:
            send("msg8");
            break;
        }
        if (x0 > 0) {
          send("msg9");
          new S29();
        } else {
          new S28();
          send("msg8");
        }
        break;
      case EV315:
        if (x7 > 0) {
          new S1();
          send("msg1");
          send("msg5");
          log("note");
        }
        new S19();
        new S21();
        break;
      case EV316:
        if (x5 > 0) {
          try {
            new S7();
            log("note");
            send("msg6");
          } finally {
            new S14();
          }
          new S26();
          send("msg18");
        } else {
          if (x7 > 0) {
            new S16();
            new S19();
            send("msg12");
            log("note");
          }
          log("note");
          try {
            send("msg11");
          } catch (IOException e) {
            send("msg9");
            new S8();
            new S28();
            new S15();
          }
          if (x1 > 0) {
            send("msg18");
          }
        }
        break;
    }
    send("msg8");
  }
  public void exit() {
    switch (event) {
      case EV317:
        send("msg10");
        send("msg2");
        break;
      case EV318:
        new S12();
        if (x7 > 0) {
          send("msg1");
          send("msg8");
        }
        send("msg12");
        break;
    }
  }
  void handle() {
    log("note");
    if (x5 > 0) {
      new S15();
      new S10();
      if (x8 > 0) {
        send("msg18");
        send("msg9");
        if (x2 > 0) {
          new S19();
        }
      }
    } else {
      if (x0 > 0) {
        send("msg15");
        try {
          send("msg13");
          send("msg15");
          new S2();
          send("msg17");
        } catch (IllegalStateException e) {
          log("note");
          send("msg8");
          new S26();
          send("msg3");
        }
        switch (event) {
          case EV319:
            send("msg10");
            break;
          case EV320:
            send("msg1");
            break;
        }
        new S20();
      }
      try {
        if (x5 > 0) {
          new S20();
          new S21();
          new S20();
        }
        try {
          new S26();
          new S5();
          send("msg11");
        } catch (IllegalStateException e) {
          send("msg17");
          new S23();
          send("msg11");
          send("msg8");
        } catch (IOException e) {
          new S22();
        }
      } catch (IOException e) {
        new S1();
        new S2();
        try {
          new S26();
          new S27();
        } catch (IOException e) {
          log("note");
          send("msg7");
          send("msg19");
        } catch (IOException e) {
          new S18();
          new State();
          new S20();
          new S1();
        }
      } catch (IOException e) {
        switch (event) {
          case EV321:
            new S26();
            send("msg0");
            new S22();
            break;
          case EV322:
            send("msg17");
            log("note");
            send("msg0");
            new S16();
            break;
        }
      }
      new S16();
      try {
        new S6();
      } catch (IOException e) {
        send("msg15");
        new S8();
      }
    }
  }
  public void tick() {
    new S22();
    if (x4 > 0) {
      new S23();
    } else {
      send("msg2");
      send("msg12");
      send("msg3");
      new S11();
    }
    new S21();
  }
  public void reset() {
    new Helper();
    try {
      new S15();
      log("note");
      try {
        new S19();
        send("msg1");
        log("note");
      } finally {
        log("note");
      }
      send("msg0");
    } catch (IllegalStateException e) {
      try {
        send("msg16");
        send("msg9");
      } catch (IOException e) {
        new S7();
        new S17();
        if (x9 > 0) {
          new Helper();
          new S21();
          new S28();
        } else {
          new S30();
          send("msg18");
        }
        new S24();
      }
    } finally {
      if (x2 > 0) {
        try {
          send("msg13");
          send("msg19");
          new S5();
        } catch (IllegalStateException e) {
          send("msg13");
          send("msg1");
          new S2();
          log("note");
        } catch (TimeoutException e) {
          new S23();
          send("msg14");
        }
        send("msg6");
        send("msg0");
      }
      new S3();
    }
    new S16();
    log("note");
  }
}
