class S12 extends State {
  void enter() {
    send("msg18");
    if (x7 > 0) {
      send("msg0");
      send("msg9");
      switch (event) {
        case EV194:
          send("msg5");
          new S3();
          send("msg18");
          break;
        case EV195:
          switch (event) {
            case EV196:
              log("note");
              new S28();
              break;
          }
          new S5();
          new S22();
          send("msg18");
          break;
      }
      log("note");
    } else {
      switch (event) {
        case EV197:
          send("msg9");
          new S17();
          send("msg9");
          break;
        case EV198:
          new S18();
          send("msg5");
          new S11();
          new S2();
          break;
      }
      send("msg4");
    }
  }
  void exit() {
    send("msg4");
    new S5();
  }
  void handle() {
    new S16();
  }
  void tick() {
    try {
      new S1();
      if (x4 > 0) {
        log("note");
        send("msg6");
        if (x1 > 0) {
          log("note");
          log("note");
          send("msg16");
        } else {
          send("msg5");
        }
        new S11();
      } else {
        new S11();
        if (x1 > 0) {
          send("msg6");
        }
        new S9();
      }
      new S10();
    } catch (IllegalStateException e) {
      new S5();
      send("msg14");
      new S4();
      if (x1 > 0) {
        try {
          new S14();
        } catch (IllegalStateException e) {
          send("msg1");
          send("msg7");
          send("msg14");
          send("msg12");
        } finally {
          new S4();
        }
        log("note");
      }
    }
    try {
      new S5();
      try {
        log("note");
      } catch (IOException e) {
        new Helper();
        try {
          send("msg13");
          new S28();
        } catch (IOException e) {
          new S24();
          send("msg14");
          new State();
          new S14();
        } catch (IllegalStateException e) {
          new S8();
          new S11();
          log("note");
        }
        new S24();
      } catch (TimeoutException e) {
        new S29();
        switch (event) {
          case EV199:
            new S10();
            new S6();
            new S26();
            new S22();
            break;
        }
        new S26();
        if (x5 > 0) {
          send("msg4");
          send("msg0");
          new S6();
        } else {
          new S12();
          log("note");
          new S30();
          new S3();
        }
      }
      new S20();
      new S15();
    } finally {
      try {
        new S20();
        new S24();
      } catch (TimeoutException e) {
        send("msg17");
        new S4();
        send("msg8");
        switch (event) {
          case EV200:
            new S21();
            log("note");
            break;
        }
      }
      switch (event) {
        case EV201:
          new S9();
          new S12();
          break;
        case EV202:
          if (x1 > 0) {
            new S3();
            send("msg18");
          } else {
            log("note");
            new S19();
            new S19();
            new State();
          }
          break;
      }
      send("msg3");
      switch (event) {
        case EV203:
          new Helper();
          break;
        case EV204:
          log("note");
          send("msg4");
          send("msg1");
          new S25();
          break;
        case EV205:
          if (x2 > 0) {
            send("msg4");
            new S30();
            send("msg19");
            new S19();
          }
          if (x6 > 0) {
            new S22();
          } else {
            new Helper();
            new S14();
          }
          new S10();
          new S13();
          break;
      }
    }
    try {
      try {
        if (x0 > 0) {
          new S3();
          new S16();
          send("msg14");
          send("msg16");
        } else {
          new S16();
          new S8();
          new S18();
          new S7();
        }
        send("msg0");
        send("msg18");
      } catch (IOException e) {
        new S25();
        try {
          new S9();
          new S25();
        } catch (TimeoutException e) {
          send("msg2");
          send("msg5");
        }
        if (x1 > 0) {
          new S23();
          new S4();
          new S7();
        }
        send("msg15");
      }
    } catch (IllegalStateException e) {
      send("msg17");
      send("msg9");
    } catch (TimeoutException e) {
      if (x2 > 0) {
        new S24();
        send("msg4");
      } else {
        new S5();
        new S8();
        new S6();
        new State();
      }
      new S16();
    }
    new S6();
  }
  void reset() {
    try {
      switch (event) {
        case EV206:
          if (x9 > 0) {
            send("msg0");
            new S10();
          } else {
            send("msg1");
          }
          send("msg6");
          break;
      }
      switch (event) {
        case EV207:
          new S29();
          new S5();
          new S29();
          log("note");
          break;
        case EV208:
          new S9();
          new Helper();
          switch (event) {
            case EV209:
              new S22();
              new S9();
              new S18();
              break;
            case EV210:
              send("msg16");
              break;
          }
          try {
            new S7();
            log("note");
            new S19();
          } catch (TimeoutException e) {
            new S25();
          }
          break;
        case EV211:
          if (x0 > 0) {
            send("msg6");
            send("msg15");
            new S24();
          } else {
            send("msg15");
            new S27();
            new S3();
          }
          new S12();
          break;
      }
      send("msg3");
    } catch (IllegalStateException e) {
      if (x5 > 0) {
        log("note");
        new S20();
        if (x8 > 0) {
          log("note");
        }
        send("msg10");
      }
    } catch (TimeoutException e) {
      send("msg2");
      log("note");
      new S26();
    }
    send("msg16");
    new S3();
    try {
      send("msg12");
      if (x7 > 0) {
        new S1();
        new S15();
        try {
          new S4();
          new S5();
        } catch (IOException e) {
          new Helper();
          send("msg0");
        }
      } else {
        new S3();
        new S8();
        new S9();
        if (x4 > 0) {
          send("msg15");
        }
      }
    } catch (IllegalStateException e) {
      if (x0 > 0) {
        try {
          new S24();
          send("msg4");
          send("msg0");
        } catch (IOException e) {
          new Helper();
        } catch (IOException e) {
          send("msg11");
          send("msg16");
        }
        send("msg15");
      } else {
        new S23();
        if (x8 > 0) {
          log("note");
        } else {
          new S7();
        }
        switch (event) {
          case EV212:
            new S4();
            new S11();
            new S16();
            new S15();
            break;
          case EV213:
            send("msg2");
            new S14();
            new S21();
            new S26();
            break;
        }
      }
      try {
        new S11();
        switch (event) {
          case EV214:
            new S22();
            send("msg3");
            new State();
            break;
        }
        try {
          new S29();
          send("msg6");
        } catch (IllegalStateException e) {
          new S10();
          new S11();
          send("msg12");
          send("msg6");
        }
        if (x8 > 0) {
          send("msg18");
          new S23();
          new S15();
        } else {
          new S25();
          new S11();
        }
      } catch (IllegalStateException e) {
        send("msg14");
        new S5();
        if (x2 > 0) {
          new S8();
        }
        new S9();
      } catch (TimeoutException e) {
        send("msg19");
        send("msg16");
        new S13();
        if (x2 > 0) {
          new S27();
          new S15();
        } else {
          new S8();
          new S29();
          new S14();
          new S6();
        }
      }
    } catch (IllegalStateException e) {
      if (x7 > 0) {
        new S3();
        try {
          new State();
        } finally {
          new S11();
          send("msg15");
          new S29();
        }
        log("note");
      }
      if (x0 > 0) {
        new S12();
        send("msg14");
      }
      send("msg14");
      log("note");
    }
  }
}
